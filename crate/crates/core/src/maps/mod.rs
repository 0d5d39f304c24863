//! Maps from graph braid complexes into Salvetti complexes, and the group
//! homomorphisms they induce.

mod cover_hom;
mod cubical;
mod presentation;
mod salvetti;

pub use cover_hom::{
    check_cover_homomorphism, cover_homomorphism, CoverHomReport, CoverHomomorphism,
};
pub use cubical::{
    phi_map, phi_map_from_space, CubicalMap, IsometryViolation, IsometryViolationKind,
    LocalIsometryReport, VertexCertificate,
};
pub use presentation::{
    fundamental_group_presentation, induced_homomorphism, GeneratorImage, HomomorphismReport,
    Presentation, RelatorCheck,
};
pub use salvetti::{salvetti, SalvettiComplex, SignedGenerator};
