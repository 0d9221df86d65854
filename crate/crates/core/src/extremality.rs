//! Extremality of a vector in a cone `{x | A x ≤ B x}`.
//!
//! Near a point `g` of the cone only the rows saturated at `g`
//! (`A_k g = B_k g`) matter, and each of them only through the indices
//! attaining the maximum on either side. The row then reads "some attaining
//! index on the right must be at least as large as every attaining index on
//! the left", i.e. a hyperedge from the right argmax to the left argmax.
//! `g` is extreme iff the resulting tangent hypergraph, taken over
//! `supp(g)`, has a least strongly connected component; its members are the
//! types `t` such that `g` is minimal in `{x ∈ C | x_t = g_t}`.
//!
//! [`zero_one_tangent_elements`] enumerates the `{-inf, 0}`-vectors of the
//! tangent cone directly, which decides the same questions in exponential
//! time and serves as an oracle.

use crate::cone::IneqSystem;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::maxplus::{argmax_set, row_product, Scalar, Vector};
use crate::minscc::min_scc_count;

/// Default bound on `|supp(g)|` for the enumeration oracle.
pub const ENUMERATION_CAP: usize = 20;

/// The tangent hypergraph `H(g, C)` over the support of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentHypergraph {
    pub hypergraph: Hypergraph,
    /// `node_map[local] = original` index; ascending.
    pub node_map: Vec<usize>,
}

impl TangentHypergraph {
    pub fn local_of(&self, original: usize) -> Option<usize> {
        self.node_map.binary_search(&original).ok()
    }
}

/// `supp(x)`, ascending.
pub fn support(x: &Vector) -> Vec<usize> {
    x.support()
}

fn check_point(g: &Vector, s: &IneqSystem) -> Result<()> {
    if g.len() != s.dim() {
        return Err(Error::DimensionMismatch { expected: s.dim(), found: g.len() });
    }
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !s.satisfies(g)? {
        return Err(Error::NotInCone);
    }
    Ok(())
}

pub fn build_tangent_hypergraph(g: &Vector, s: &IneqSystem) -> Result<TangentHypergraph> {
    check_point(g, s)?;
    let node_map = g.support();
    let mut local = vec![usize::MAX; g.len()];
    for (l, &i) in node_map.iter().enumerate() {
        local[i] = l;
    }
    let mut hypergraph = Hypergraph::new(node_map.len());
    for k in 0..s.len() {
        let (a, b) = s.row(k);
        let ag = row_product(a, g);
        if ag.is_bottom() || ag != row_product(b, g) {
            continue;
        }
        let tail: Vec<usize> = argmax_set(b, g).into_iter().map(|i| local[i]).collect();
        let head: Vec<usize> = argmax_set(a, g).into_iter().map(|i| local[i]).collect();
        hypergraph.add_edge(&tail, &head)?;
    }
    Ok(TangentHypergraph { hypergraph, node_map })
}

pub fn is_extreme(g: &Vector, s: &IneqSystem) -> Result<bool> {
    let t = build_tangent_hypergraph(g, s)?;
    Ok(min_scc_count(&t.hypergraph).nb == 1)
}

/// The smallest index `t` such that `g` is extreme of type `t`, or `None`
/// if `g` is not extreme.
pub fn extreme_type(g: &Vector, s: &IneqSystem) -> Result<Option<usize>> {
    let t = build_tangent_hypergraph(g, s)?;
    let r = min_scc_count(&t.hypergraph);
    Ok(r.least_class().map(|class| t.node_map[class[0]]))
}

/// Saturated rows at `g` as pairs of bit masks over the local support
/// indices: `(left argmax, right argmax)`.
fn tangent_constraints(g: &Vector, s: &IneqSystem, supp: &[usize]) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for k in 0..s.len() {
        let (a, b) = s.row(k);
        let terms = |row: &[Scalar]| -> Vec<Scalar> {
            supp.iter().map(|&i| crate::maxplus::tmul(&row[i], &g[i])).collect()
        };
        let (ta, tb) = (terms(a), terms(b));
        let best_a = ta.iter().max().cloned().unwrap_or(Scalar::Bottom);
        let best_b = tb.iter().max().cloned().unwrap_or(Scalar::Bottom);
        if best_a != best_b || best_a.is_bottom() {
            continue;
        }
        let mask = |terms: &[Scalar]| {
            terms.iter().enumerate().filter(|(_, v)| **v == best_a).fold(0u32, |m, (l, _)| m | 1 << l)
        };
        out.push((mask(&ta), mask(&tb)));
    }
    out
}

/// Nonzero `{-inf, 0}`-vectors of the tangent cone at `g`, over `supp(g)`
/// (`true` stands for `0`). Listed by increasing bit mask, coordinate `l`
/// of the support being bit `l`.
pub fn zero_one_tangent_elements(g: &Vector, s: &IneqSystem) -> Result<Vec<Vec<bool>>> {
    Ok(enumerate(g, s, ENUMERATION_CAP)?.1.into_iter().map(|m| unpack(m, g.support().len())).collect())
}

fn enumerate(g: &Vector, s: &IneqSystem, cap: usize) -> Result<(Vec<usize>, Vec<u32>)> {
    check_point(g, s)?;
    let supp = g.support();
    if supp.len() > cap.min(31) {
        return Err(Error::EnumerationCap { support: supp.len(), cap });
    }
    let constraints = tangent_constraints(g, s, &supp);
    let elements = (1u32..1 << supp.len())
        .filter(|x| constraints.iter().all(|&(left, right)| x & left == 0 || x & right != 0))
        .collect();
    Ok((supp, elements))
}

fn unpack(mask: u32, len: usize) -> Vec<bool> {
    (0..len).map(|l| mask >> l & 1 == 1).collect()
}

/// Writes a `{-inf, 0}`-vector as a string of `1` (for `0`) and `0` (for
/// `-inf`).
pub fn format_zero_one(x: &[bool]) -> String {
    x.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Extremality by enumeration: `g` is extreme iff for some `t` the all-`0`
/// vector is the only enumerated element with coordinate `t` equal to `0`.
pub fn is_extreme_oracle(g: &Vector, s: &IneqSystem) -> Result<bool> {
    Ok(oracle_witness(g, s)?.is_some())
}

/// The smallest original index `t` witnessing [`is_extreme_oracle`].
pub fn oracle_witness(g: &Vector, s: &IneqSystem) -> Result<Option<usize>> {
    let (supp, elements) = enumerate(g, s, ENUMERATION_CAP)?;
    let full = (1u32 << supp.len()) - 1;
    let witness = (0..supp.len()).find(|&l| elements.iter().all(|&x| x & 1 << l == 0 || x == full));
    Ok(witness.map(|l| supp[l]))
}

/// Original indices `t` such that every enumerated element with `x_l = -inf`
/// also has `x_t = -inf`. These are exactly the nodes reachable from `l` in
/// the tangent hypergraph.
pub fn reachability_equals_propagation(g: &Vector, s: &IneqSystem, l: usize) -> Result<Vec<usize>> {
    let (supp, elements) = enumerate(g, s, ENUMERATION_CAP)?;
    let Some(local) = supp.iter().position(|&i| i == l) else {
        return Err(Error::OutOfRange(format!("index {l} is not in the support")));
    };
    Ok((0..supp.len())
        .filter(|&t| elements.iter().all(|&x| x & 1 << local != 0 || x & 1 << t == 0))
        .map(|t| supp[t])
        .collect())
}
