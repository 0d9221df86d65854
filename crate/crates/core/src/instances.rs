//! Seeded instance generators and the small reference instances.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{GeneratorSet, IneqSystem};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::maxplus::{Scalar, Vector};

/// Parameters of [`random_system`].
#[derive(Clone, Debug, PartialEq)]
pub struct RandomSpec {
    pub d: usize,
    pub n: usize,
    /// Probability that a coefficient is finite.
    pub density: f64,
    /// Inclusive bounds of the finite coefficients.
    pub coeff_range: (i64, i64),
    pub seed: u64,
}

impl RandomSpec {
    pub fn new(d: usize, n: usize, seed: u64) -> Self {
        RandomSpec { d, n, density: 0.5, coeff_range: (-5, 5), seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(Error::InvalidSpec("d must be at least 1".into()));
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(Error::InvalidSpec(format!("density {} outside (0, 1]", self.density)));
        }
        if self.coeff_range.0 > self.coeff_range.1 {
            return Err(Error::InvalidSpec(format!(
                "empty coefficient range [{}, {}]",
                self.coeff_range.0, self.coeff_range.1
            )));
        }
        Ok(())
    }
}

/// The tropical canonical basis `ε¹, …, ε^d` of `ℝ_max^d`.
pub fn canonical_basis(d: usize) -> GeneratorSet {
    GeneratorSet::from_vectors(d, (0..d).map(|i| Vector::unit(d, i))).expect("unit vectors are nonzero")
}

/// A random system `A x ≤ B x`.
///
/// Rows with an all `-inf` side are redrawn. Each row is then oriented so
/// that the vector of zeros satisfies it: its two sides are swapped when
/// `max A > max B`. The cone therefore always contains a point of full
/// support and is never reduced to `{0}`.
pub fn random_system(spec: &RandomSpec) -> Result<IneqSystem> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let draw_row = |rng: &mut ChaCha8Rng| -> Vec<Scalar> {
        (0..spec.d)
            .map(|_| {
                if rng.gen_bool(spec.density) {
                    Scalar::from_int(rng.gen_range(spec.coeff_range.0..=spec.coeff_range.1))
                } else {
                    Scalar::Bottom
                }
            })
            .collect()
    };
    let mut system = IneqSystem::empty(spec.d);
    while system.len() < spec.n {
        let a = draw_row(&mut rng);
        let b = draw_row(&mut rng);
        let all_bottom = |row: &[Scalar]| row.iter().all(Scalar::is_bottom);
        if all_bottom(&a) || all_bottom(&b) {
            continue;
        }
        let max = |row: &[Scalar]| row.iter().max().cloned();
        if max(&a) > max(&b) {
            system.push_row(&b, &a)?;
        } else {
            system.push_row(&a, &b)?;
        }
    }
    Ok(system)
}

/// A random hypergraph whose tails and heads are uniform nonempty node sets
/// of size at most `max_tail` and `max_head`.
pub fn random_hypergraph(
    node_count: usize,
    edge_count: usize,
    max_tail: usize,
    max_head: usize,
    seed: u64,
) -> Result<Hypergraph> {
    if node_count == 0 || max_tail == 0 || max_head == 0 {
        return Err(Error::InvalidSpec("node count and edge bounds must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = Hypergraph::new(node_count);
    for _ in 0..edge_count {
        let t = rng.gen_range(1..=max_tail.min(node_count));
        let tail = sample(&mut rng, node_count, t).into_vec();
        let k = rng.gen_range(1..=max_head.min(node_count));
        let head = sample(&mut rng, node_count, k).into_vec();
        h.add_edge(&tail, &head)?;
    }
    Ok(h)
}

/// Signed cyclic cones are not generated: their construction is not
/// reproduced here.
pub fn signed_cyclic_system(_d: usize, _n: usize) -> Result<IneqSystem> {
    Err(Error::Unsupported(
        "signed cyclic cones are not implemented; see the literature on tropical cyclic polytopes for their construction",
    ))
}

pub mod fixtures {
    //! Reference instances with known answers.

    use super::*;
    pub use crate::hypergraph::LabeledHypergraph;

    fn row(entries: [Option<i64>; 3]) -> Vec<Scalar> {
        entries.iter().map(|e| e.map_or(Scalar::Bottom, Scalar::from_int)).collect()
    }

    /// The cone in `ℝ_max^3` given by
    ///
    /// ```text
    /// x3 ≤ x1 + 2
    /// x1 ≤ max(x2, x3)
    /// x1 ≤ x3 + 2
    /// x3 ≤ max(x1, x2 − 1)
    /// ```
    pub fn example_cone() -> IneqSystem {
        IneqSystem::from_rows(
            3,
            vec![
                (row([None, None, Some(0)]), row([Some(2), None, None])),
                (row([Some(0), None, None]), row([None, Some(0), Some(0)])),
                (row([Some(0), None, None]), row([None, None, Some(2)])),
                (row([None, None, Some(0)]), row([Some(0), Some(-1), None])),
            ],
        )
        .expect("well-formed fixture")
    }

    /// Its extreme rays `(-inf, 0, -inf)`, `(-2, 1, 0)`, `(2, 2, 0)` and
    /// `(0, -inf, 0)`, as usually written (not normalized).
    pub fn example_cone_rays() -> Vec<Vector> {
        vec![
            Vector::from_ints(&[None, Some(0), None]),
            Vector::from_ints(&[Some(-2), Some(1), Some(0)]),
            Vector::from_ints(&[Some(2), Some(2), Some(0)]),
            Vector::from_ints(&[Some(0), None, Some(0)]),
        ]
    }

    /// The halfspace `x2 ≤ x3 + 5/2` as `(a, b)`.
    pub fn example_cut() -> (Vec<Scalar>, Vec<Scalar>) {
        let a = vec![Scalar::Bottom, Scalar::unit(), Scalar::Bottom];
        let b = vec![Scalar::Bottom, Scalar::Bottom, Scalar::from_ratio(5, 2)];
        (a, b)
    }

    /// [`example_cone`] with [`example_cut`] appended.
    pub fn example_cone_cut() -> IneqSystem {
        let mut s = example_cone();
        let (a, b) = example_cut();
        s.push_row(&a, &b).expect("same dimension");
        s
    }

    /// Nodes `u v w x y t`; edges `u → v`, `v → w`, `w → u`,
    /// `{v, w} → {x, y}`, `{w, y} → {t}`. Minimal SCCs: `{x}`, `{y}`, `{t}`.
    pub fn three_sinks() -> LabeledHypergraph {
        LabeledHypergraph::from_labeled_edges(
            &["u", "v", "w", "x", "y", "t"],
            &[
                (&["u"], &["v"]),
                (&["v"], &["w"]),
                (&["w"], &["u"]),
                (&["v", "w"], &["x", "y"]),
                (&["w", "y"], &["t"]),
            ],
        )
    }

    /// Nodes `u v t x y`; `{u, x}` and `{v, y}` are SCCs that only close
    /// through hyperedges, and `{t}` is the least SCC.
    pub fn unmerged_scc() -> LabeledHypergraph {
        LabeledHypergraph::from_labeled_edges(
            &["u", "v", "t", "x", "y"],
            &[
                (&["u"], &["t"]),
                (&["v"], &["t"]),
                (&["x"], &["u"]),
                (&["y"], &["v"]),
                (&["u", "t"], &["x"]),
                (&["t", "v"], &["y"]),
            ],
        )
    }

    #[derive(Clone, Debug)]
    pub enum FixtureData {
        Cone { system: IneqSystem, expected_rays: Vec<Vector> },
        Hypergraph { graph: LabeledHypergraph, expected_minimal: Vec<&'static str> },
    }

    #[derive(Clone, Debug)]
    pub struct Fixture {
        pub name: &'static str,
        pub data: FixtureData,
    }

    /// The reference instances with their expected answers. Minimal
    /// classes are given as space-separated labels.
    pub fn reference_fixtures() -> Vec<Fixture> {
        vec![
            Fixture {
                name: "cone",
                data: FixtureData::Cone { system: example_cone(), expected_rays: example_cone_rays() },
            },
            Fixture {
                name: "three-sinks",
                data: FixtureData::Hypergraph { graph: three_sinks(), expected_minimal: vec!["x", "y", "t"] },
            },
            Fixture {
                name: "unmerged-scc",
                data: FixtureData::Hypergraph { graph: unmerged_scc(), expected_minimal: vec!["t"] },
            },
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::hypergraph::scc_oracle;

    #[test]
    fn canonical_basis_examples() {
        let e = canonical_basis(3);
        assert_eq!(
            e.vectors(),
            &[
                Vector::from_ints(&[Some(0), None, None]),
                Vector::from_ints(&[None, Some(0), None]),
                Vector::from_ints(&[None, None, Some(0)]),
            ]
        );
        assert_eq!(canonical_basis(1).vectors(), &[Vector::from_ints(&[Some(0)])]);
    }

    #[test]
    fn random_system_is_reproducible() {
        let spec = RandomSpec::new(4, 6, 42);
        assert_eq!(random_system(&spec).unwrap(), random_system(&spec).unwrap());
        let other = RandomSpec { seed: 43, ..spec.clone() };
        assert_ne!(random_system(&spec).unwrap(), random_system(&other).unwrap());
    }

    #[test]
    fn dense_zero_range_gives_unit_matrices() {
        let spec = RandomSpec { d: 3, n: 4, density: 1.0, coeff_range: (0, 0), seed: 7 };
        let s = random_system(&spec).unwrap();
        assert_eq!(s.len(), 4);
        for k in 0..4 {
            let (a, b) = s.row(k);
            assert!(a.iter().chain(b).all(Scalar::is_unit));
        }
    }

    #[test]
    fn random_rows_never_force_bottom() {
        for seed in 0..50 {
            let spec = RandomSpec { d: 3, n: 5, density: 0.3, coeff_range: (-2, 2), seed };
            let s = random_system(&spec).unwrap();
            for k in 0..s.len() {
                let (a, b) = s.row(k);
                assert!(a.iter().all(Scalar::is_bottom) || !b.iter().all(Scalar::is_bottom));
            }
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(random_system(&RandomSpec { d: 0, ..RandomSpec::new(1, 1, 0) }).is_err());
        assert!(random_system(&RandomSpec { density: 0.0, ..RandomSpec::new(2, 1, 0) }).is_err());
        assert!(random_system(&RandomSpec { coeff_range: (1, 0), ..RandomSpec::new(2, 1, 0) }).is_err());
        assert!(random_hypergraph(0, 1, 1, 1, 0).is_err());
        assert!(matches!(signed_cyclic_system(4, 6), Err(Error::Unsupported(_))));
    }

    #[test]
    fn random_hypergraph_examples() {
        let g = random_hypergraph(6, 10, 1, 3, 5).unwrap();
        assert!(g.is_digraph());
        assert_eq!(g.edge_count(), 10);
        assert!(random_hypergraph(6, 0, 3, 3, 5).unwrap().edge_count() == 0);
        assert_eq!(random_hypergraph(8, 12, 3, 3, 9).unwrap(), random_hypergraph(8, 12, 3, 3, 9).unwrap());
        for e in random_hypergraph(5, 40, 2, 4, 1).unwrap().edges() {
            assert!((1..=2).contains(&e.tail().len()));
            assert!((1..=4).contains(&e.head().len()));
        }
    }

    #[test]
    fn fixture_shapes() {
        let fixtures = reference_fixtures();
        let names: Vec<&str> = fixtures.iter().map(|f| f.name).collect();
        assert_eq!(names, vec!["cone", "three-sinks", "unmerged-scc"]);
        let s = example_cone();
        assert_eq!((s.len(), s.dim()), (4, 3));
        let h = three_sinks();
        assert_eq!((h.graph.node_count(), h.graph.edge_count()), (6, 5));
        let h = unmerged_scc();
        assert_eq!((h.graph.node_count(), h.graph.edge_count()), (5, 6));
    }

    #[test]
    fn fixture_expectations_hold_by_brute_force() {
        for f in reference_fixtures() {
            match f.data {
                FixtureData::Cone { system, expected_rays } => {
                    for g in &expected_rays {
                        assert!(system.satisfies(g).unwrap());
                    }
                }
                FixtureData::Hypergraph { graph, expected_minimal } => {
                    let minimal: Vec<String> =
                        scc_oracle(&graph.graph).minimal_classes().iter().map(|c| graph.names(c)).collect();
                    assert_eq!(minimal, expected_minimal, "{}", f.name);
                }
            }
        }
    }
}
