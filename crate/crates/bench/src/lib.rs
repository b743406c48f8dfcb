//! Shared inputs for the kernel benchmarks.

use disting_core::graph::{make_family, FamilyKind, FamilySpec};
use disting_core::Graph;

/// Named graphs spanning trivial, small and large automorphism groups.
pub fn bench_graphs() -> Vec<(&'static str, Graph)> {
    let f = |kind, p| make_family(FamilySpec::new(kind, p)).unwrap();
    vec![
        ("path12", f(FamilyKind::Path, 12)),
        ("cycle10", f(FamilyKind::Cycle, 10)),
        ("star8", f(FamilyKind::Star, 8)),
        ("complete7", f(FamilyKind::Complete, 7)),
        ("friendship4", f(FamilyKind::Friendship, 4)),
        ("spider5", f(FamilyKind::Spider, 5)),
        ("petersen", disting_core::parse_graph6("IheA@GUAo").unwrap()),
    ]
}
