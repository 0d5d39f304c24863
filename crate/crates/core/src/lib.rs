//! Graph braid group cube complexes, right-angled Artin groups, and
//! machine-checkable certificates relating them.

pub mod complex;
pub mod error;
pub mod graph;
pub mod maps;
pub mod raag;

pub use complex::{reduced_config_space, CubeComplex, CubeLabel};
pub use error::{ComplexError, GraphError, MapsError, RaagError};
pub use graph::{
    builtin_graph, delta_graph, line_graph, opposite_graph, subdivide, validate_cover,
    GraphMorphism, SimplicialGraph,
};
pub use maps::{phi_map, salvetti, CubicalMap, SalvettiComplex};
pub use raag::{Letter, MoveCertificate, RaagPresentation, Word};
