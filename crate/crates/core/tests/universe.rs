use degexclude::enumerate::{all_graphical_sequences, RealizationIndex};
use degexclude::realize::{Backtracking, RealizationSource};
use degexclude::verify::{Universe, UNLABELED_GRAPH_COUNTS};
use degexclude::Graph;

#[test]
fn index_and_backtracking_agree() {
    let index = RealizationIndex::build(7).unwrap();
    let bt = Backtracking::default();
    for n in 0..=7 {
        for d in all_graphical_sequences(n).unwrap() {
            let mut a: Vec<Graph> = index.realizations(&d).unwrap().into_owned();
            let mut b: Vec<Graph> = bt.realizations(&d).unwrap().into_owned();
            a.sort();
            b.sort();
            assert_eq!(a, b, "({d})");
        }
    }
}

#[test]
fn sequences_counted_by_labeled_graphs() {
    // distinct degree sequences over every labeled graph on n vertices
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, e)| *e)
                .collect();
            seen.insert(Graph::from_edges(n, &edges).unwrap().degree_sequence());
        }
        let listed: std::collections::BTreeSet<_> =
            all_graphical_sequences(n).unwrap().into_iter().collect();
        assert_eq!(listed, seen, "n={n}");
    }
}

#[test]
fn universe_counts() {
    let u = Universe::generate(7).unwrap();
    for k in 0..=7 {
        assert_eq!(u.graphs(k).len(), UNLABELED_GRAPH_COUNTS[k]);
    }
    assert_eq!(
        (0..=7).map(|k| u.sequences(k).len()).collect::<Vec<_>>(),
        [1, 1, 2, 4, 11, 31, 102, 342]
    );
}
