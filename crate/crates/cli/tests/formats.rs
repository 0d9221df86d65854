use proptest::collection::vec;
use proptest::prelude::*;
use tropical_cli::formats::*;
use tropical_cones::cone::AffineSystem;
use tropical_cones::hypergraph::{Hypergraph, LabeledHypergraph};
use tropical_cones::{IneqSystem, Matrix, Scalar, Vector};

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => Just(Scalar::Bottom),
        3 => (-20i64..20, 1i64..5).prop_map(|(p, q)| Scalar::from_ratio(p, q)),
    ]
}

fn rows(n: usize, width: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    vec(vec(scalar(), width), n)
}

fn system() -> impl Strategy<Value = IneqSystem> {
    (1usize..5, 0usize..5).prop_flat_map(|(d, n)| {
        (rows(n, d), rows(n, d)).prop_map(move |(a, b)| IneqSystem::from_rows(d, a.into_iter().zip(b).collect()).unwrap())
    })
}

fn affine() -> impl Strategy<Value = AffineSystem> {
    (1usize..4, 0usize..4).prop_flat_map(|(d, n)| {
        (rows(n, d), vec(scalar(), n), rows(n, d), vec(scalar(), n)).prop_map(move |(a, c, b, e)| {
            AffineSystem::new(
                Matrix::from_rows(d, a).unwrap(),
                Vector::new(c),
                Matrix::from_rows(d, b).unwrap(),
                Vector::new(e),
            )
            .unwrap()
        })
    })
}

fn vectors(d: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    vec(vec(scalar(), d).prop_map(Vector::new), 0..max)
}

fn vrep() -> impl Strategy<Value = VRep> {
    (1usize..5).prop_flat_map(|dim| {
        prop_oneof![
            vectors(dim, 5).prop_map(move |rays| VRep::Cone { dim, rays }),
            (vectors(dim, 4), vectors(dim, 4)).prop_map(move |(points, rays)| VRep::Affine { dim, points, rays }),
        ]
    })
}

fn node_set(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n.min(3)).prop_shuffle()
}

fn hypergraph() -> impl Strategy<Value = LabeledHypergraph> {
    (1usize..7, any::<bool>()).prop_flat_map(|(n, numeric)| {
        vec((node_set(n), node_set(n)), 0..8).prop_map(move |edges| {
            let labels = (0..n)
                .map(|i| if numeric { (i + 1).to_string() } else { format!("n{i}") })
                .collect();
            LabeledHypergraph { graph: Hypergraph::from_edges(n, edges).unwrap(), labels }
        })
    })
}

proptest! {
    #[test]
    fn hrep_round_trip(s in system()) {
        let text = print_hrep(&s);
        let back = parse_hrep(&text).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(print_hrep(&back), text);
    }

    #[test]
    fn affine_hrep_round_trip(s in affine()) {
        let text = print_affine_hrep(&s);
        prop_assert_eq!(parse_affine_hrep(&text).unwrap(), s);
    }

    #[test]
    fn vrep_round_trip(v in vrep()) {
        let text = print_vrep(&v);
        prop_assert_eq!(parse_vrep(&text).unwrap(), v);
    }

    #[test]
    fn hypergraph_round_trip(h in hypergraph()) {
        let text = print_hypergraph(&h);
        let back = parse_hypergraph(&text).unwrap();
        prop_assert_eq!(&back.labels, &h.labels);
        prop_assert_eq!(&back.graph, &h.graph);
    }

    #[test]
    fn vector_literals(entries in vec(scalar(), 1..6), parens in any::<bool>(), commas in any::<bool>()) {
        let shown: Vec<String> = entries.iter().map(Scalar::to_string).collect();
        let body = shown.join(if commas { ", " } else { " " });
        let text = if parens { format!("({body})") } else { body };
        prop_assert_eq!(parse_vector(&text).unwrap(), Vector::new(entries));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(s in system()) {
        let text = print_hrep(&s);
        let noisy: String = text.lines().map(|l| format!("# note\n\n{l}\n")).collect();
        prop_assert_eq!(parse_hrep(&noisy).unwrap(), s);
    }
}
