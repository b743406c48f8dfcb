use rayon::prelude::*;
use serde::Serialize;

use super::bounds::{Evaluator, IneqId};
use super::enumerate::connected_corpus;
use crate::error::{Error, Result};
use crate::graph::Site;
use crate::solver::Mode;

pub const SHARPNESS_MAX_N: usize = 8;

/// A graph and site meeting an inequality with equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub ineq: IneqId,
    pub graph6: String,
    pub site: Site,
    pub before: usize,
    pub after: usize,
    /// Sign of `after - before`; distinguishes the two tight cases of `thm2.4`.
    pub sign: i8,
}

/// Every tight (graph, site) over the connected graphs with `3 ..= n_max` vertices,
/// ordered by graph6 then site.
pub fn sharpness_search(id: IneqId, n_max: usize, eval: &Evaluator) -> Result<Vec<Witness>> {
    if n_max > SHARPNESS_MAX_N {
        return Err(Error::TooLarge { n: n_max, limit: SHARPNESS_MAX_N });
    }
    let corpus = connected_corpus(3, n_max)?;
    let per_graph: Vec<Vec<Witness>> = corpus
        .par_iter()
        .map(|g| {
            let checks = eval.check_bounds(g)?;
            Ok(checks
                .into_iter()
                .filter(|c| c.op_kind == id.op() && c.tight.contains(&id))
                .map(|c| {
                    let (before, after) = match id.mode() {
                        Mode::Vertex => (c.d_before.unwrap(), c.d_after.unwrap()),
                        Mode::Edge => (c.dp_before.unwrap(), c.dp_after.unwrap()),
                    };
                    Witness {
                        ineq: id,
                        graph6: c.graph6,
                        site: c.site,
                        before,
                        after,
                        sign: (after as i64 - before as i64).signum() as i8,
                    }
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<Witness> = per_graph.into_iter().flatten().collect();
    out.sort_by(|a, b| (&a.graph6, a.site).cmp(&(&b.graph6, b.site)));
    Ok(out)
}
