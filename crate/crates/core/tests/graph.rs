use idempotent::{Edge, GraphProblem, Interval, Query, ScalarRing, Weight};
use proptest::prelude::*;

fn weight(ring: ScalarRing) -> impl Strategy<Value = Weight> {
    let finite = (-80i64..=80).prop_map(|k| k as f64 / 8.0);
    let point = prop_oneof![4 => finite.clone(), 1 => Just(ring_zero(ring))];
    prop_oneof![
        3 => point.clone().prop_map(Weight::Point),
        1 => (finite.clone(), finite).prop_map(move |(a, b)| {
            let (lo, hi) = if ring == ScalarRing::MinPlus { (a.max(b), a.min(b)) } else { (a.min(b), a.max(b)) };
            Weight::Interval(Interval::new(ring, lo, hi).unwrap())
        }),
    ]
}

fn ring_zero(ring: ScalarRing) -> f64 {
    if ring == ScalarRing::MinPlus {
        f64::INFINITY
    } else {
        f64::NEG_INFINITY
    }
}

fn problem() -> impl Strategy<Value = GraphProblem> {
    (prop_oneof![Just(ScalarRing::MinPlus), Just(ScalarRing::MaxPlus)], 1usize..=6).prop_flat_map(|(ring, n)| {
        proptest::collection::vec((0..n, 0..n, weight(ring)), 0..12).prop_map(move |raw| {
            let edges = raw.into_iter().map(|(from, to, weight)| Edge { from, to, weight }).collect();
            GraphProblem::new(n, edges, ring, Query::Closure).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(p in problem()) {
        let text = p.to_edge_list();
        let back = GraphProblem::parse(&text, p.ring, p.query).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn json_round_trip(p in problem()) {
        let text = p.to_json().to_string();
        let back = GraphProblem::parse(&text, p.ring, p.query).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn negated_weights_swap_the_rings(n in 1usize..=6, raw in proptest::collection::vec((0usize..6, 0usize..6, 0u8..=9), 0..14)) {
        let edges = |sign: f64| raw.iter().filter(|(a, b, _)| *a < n && *b < n)
            .map(|&(from, to, w)| Edge { from, to, weight: Weight::Point(sign * w as f64) })
            .collect::<Vec<_>>();
        let min = GraphProblem::new(n, edges(1.0), ScalarRing::MinPlus, Query::Closure).unwrap();
        let max = GraphProblem::new(n, edges(-1.0), ScalarRing::MaxPlus, Query::Closure).unwrap();
        let (a, b) = (min.shortest_paths().unwrap(), max.shortest_paths().unwrap());
        for (x, y) in a.entries().iter().zip(b.entries()) {
            prop_assert_eq!(*x, -*y);
        }
    }
}
