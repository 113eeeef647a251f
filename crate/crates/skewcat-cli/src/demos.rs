//! Fixtures bundled into the binary.

const DEMOS: &[(&str, &str)] = &[
    ("cartesian", include_str!("../fixtures/cartesian.json")),
    ("dot1", include_str!("../fixtures/dot1.json")),
    ("dot2", include_str!("../fixtures/dot2.json")),
    ("acu-arrow", include_str!("../fixtures/acu-arrow.json")),
    ("rank1-monoid", include_str!("../fixtures/rank1-monoid.json")),
    ("broken-gamma", include_str!("../fixtures/broken-gamma.json")),
    ("dim-bound-counterexample", include_str!("../fixtures/dim-bound-counterexample.json")),
];

/// Single-entry corruptions, one per component family. Each should fail.
pub const MUTATIONS: &[(&str, &str)] = &[
    ("broken-gamma", include_str!("../fixtures/broken-gamma.json")),
    ("mut-Gamma", include_str!("../fixtures/mutations/mut-Gamma.json")),
    ("mut-Gamma-prime", include_str!("../fixtures/mutations/mut-Gamma-prime.json")),
    ("mut-J", include_str!("../fixtures/mutations/mut-J.json")),
    ("mut-acu-eps", include_str!("../fixtures/mutations/mut-acu-eps.json")),
    ("mut-eps", include_str!("../fixtures/mutations/mut-eps.json")),
    ("mut-eta", include_str!("../fixtures/mutations/mut-eta.json")),
    ("mut-ev", include_str!("../fixtures/mutations/mut-ev.json")),
    ("mut-lambda2", include_str!("../fixtures/mutations/mut-lambda2.json")),
    ("mut-pi", include_str!("../fixtures/mutations/mut-pi.json")),
    ("mut-psi", include_str!("../fixtures/mutations/mut-psi.json")),
    ("mut-q", include_str!("../fixtures/mutations/mut-q.json")),
    ("mut-sigma", include_str!("../fixtures/mutations/mut-sigma.json")),
];

pub fn names() -> Vec<&'static str> {
    DEMOS.iter().map(|(n, _)| *n).collect()
}

pub fn fixture(name: &str) -> Option<&'static str> {
    DEMOS.iter().chain(MUTATIONS).find(|(n, _)| *n == name).map(|(_, t)| *t)
}
