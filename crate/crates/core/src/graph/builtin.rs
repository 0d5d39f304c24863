use super::SimplicialGraph;
use crate::error::GraphError;

/// Standard graph families with vertices named `"0"`, `"1"`, ...
///
/// * `complete:[n]`: K_n
/// * `complete_bipartite:[m, n]`: K_{m,n}, sides `0..m` and `m..m+n`
/// * `cycle:[n]`: C_n, `n >= 3`
/// * `path:[n]`: path on `n` vertices
/// * `petersen:[]`: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram
pub fn builtin_graph(name: &str, params: &[usize]) -> Result<SimplicialGraph, GraphError> {
    let arity = |n: usize| -> Result<(), GraphError> {
        if params.len() != n {
            return Err(GraphError::BadParameters {
                family: name.to_string(),
                detail: format!("expected {n} parameter(s), got {}", params.len()),
            });
        }
        if let Some(i) = params.iter().position(|&p| p == 0) {
            return Err(GraphError::NonPositiveParameter(format!(
                "{name} parameter {i}"
            )));
        }
        Ok(())
    };
    let (n, edges): (usize, Vec<(usize, usize)>) = match name {
        "complete" => {
            arity(1)?;
            let n = params[0];
            (
                n,
                (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .collect(),
            )
        }
        "complete_bipartite" => {
            arity(2)?;
            let (m, n) = (params[0], params[1]);
            (
                m + n,
                (0..m)
                    .flat_map(|a| (m..m + n).map(move |b| (a, b)))
                    .collect(),
            )
        }
        "cycle" => {
            arity(1)?;
            let n = params[0];
            if n < 3 {
                return Err(GraphError::BadParameters {
                    family: name.into(),
                    detail: "a simple cycle needs at least 3 vertices".into(),
                });
            }
            (n, (0..n).map(|i| (i, (i + 1) % n)).collect())
        }
        "path" => {
            arity(1)?;
            let n = params[0];
            (n, (1..n).map(|i| (i - 1, i)).collect())
        }
        "petersen" => {
            arity(0)?;
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            (10, e)
        }
        other => return Err(GraphError::UnknownFamily(other.to_string())),
    };
    let names = (0..n).map(|i| i.to_string()).collect();
    Ok(SimplicialGraph::from_indices(
        names,
        edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))),
    ))
}

/// Parses the `family:p1,p2` shorthand used on the command line.
pub fn parse_builtin(spec: &str) -> Result<SimplicialGraph, GraphError> {
    let (family, params) = spec.split_once(':').unwrap_or((spec, ""));
    let params = params
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| GraphError::BadParameters {
                    family: family.to_string(),
                    detail: format!("not an integer: {p:?}"),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(p) = params.iter().find(|&&p| p <= 0) {
        return Err(GraphError::NonPositiveParameter(format!(
            "{family} parameter {p}"
        )));
    }
    let params: Vec<usize> = params.into_iter().map(|p| p as usize).collect();
    builtin_graph(family, &params)
}
