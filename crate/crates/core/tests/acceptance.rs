//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, followed by
//! the first few mismatches of a failing criterion. Exits nonzero if any
//! criterion fails.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use lapimm::combinat::{alpha_tau, enumerate_partitions, inverse_frobenius, z_value, Basis, CharacterTable, Partition};
use lapimm::graph::{canonical_form, connected_bipartite_graphs, spectral_radius, wiener_index};
use lapimm::imm::{determinant_exact, normalized_immanant, permanent_exact, ExactRational, PermutationCensus};
use lapimm::orient::{
    classify_type, coefficient_via_orientations, count_b_types_all, immanant_via_orientations, transport_delta,
    VertexOrientation,
};
use lapimm::poset::{build_poset, enumerate_family, FamilySpec, HasseDiagram};
use lapimm::shift::ggs;
use lapimm::Graph;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

type Failures = Vec<String>;

const SHOWN_FAILURES: usize = 8;

fn p(s: &str) -> Partition {
    s.parse().expect("valid partition literal")
}

fn run(id: u32, title: &str, limit: Option<Duration>, check: impl FnOnce() -> Failures) -> bool {
    let start = Instant::now();
    let outcome = panic::catch_unwind(AssertUnwindSafe(check));
    let elapsed = start.elapsed();
    let mut failures = match outcome {
        Ok(f) => f,
        Err(e) => {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            vec![format!("panicked: {msg}")]
        }
    };
    if let Some(limit) = limit {
        if elapsed > limit {
            failures.push(format!("took {elapsed:.2?}, limit {limit:.2?}"));
        }
    }
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} {verdict}: {title} ({elapsed:.2?})");
    for f in failures.iter().take(SHOWN_FAILURES) {
        println!("    {f}");
    }
    if failures.len() > SHOWN_FAILURES {
        println!("    ... {} more", failures.len() - SHOWN_FAILURES);
    }
    failures.is_empty()
}

fn bipartite_corpus() -> Vec<Graph> {
    (1..=6)
        .flat_map(|n| connected_bipartite_graphs(n).expect("n <= 6 is within the corpus cap"))
        .collect()
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn table_of_monomial_alphas() -> Failures {
    // rows λ, columns μ, both in the order 1^4, 2 1^2, 2^2, 3 1, 4
    let order = ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"];
    let printed: [[i64; 5]; 5] = [
        [1, 0, 0, 0, -1],
        [0, 0, 0, 0, 4],
        [0, 0, 0, 0, -2],
        [0, 0, 0, 0, -4],
        [0, 0, 0, 0, 4],
    ];
    let mut failures = Vec::new();
    for (i, lam) in order.iter().enumerate() {
        for (j, mu) in order.iter().enumerate() {
            let got = alpha_tau(Basis::Monomial, &p(lam), &p(mu)).expect("same n");
            if got != BigInt::from(printed[i][j]) {
                failures.push(format!(
                    "lambda={} mu={}: expected {}, computed {got}",
                    p(lam).to_exponential_string(),
                    p(mu).to_exponential_string(),
                    printed[i][j]
                ));
            }
        }
    }
    failures
}

fn orientation_oracle() -> Failures {
    let mut failures = Vec::new();
    for g in bipartite_corpus() {
        let n = g.n();
        let census = PermutationCensus::new(&g.laplacian());
        for lam in enumerate_partitions(n) {
            let chi = inverse_frobenius(Basis::Schur, &lam);
            let direct = census.immanant(&chi).expect("sizes match");
            let via = immanant_via_orientations(&g, &lam).expect("bipartite");
            if direct != via {
                failures.push(format!(
                    "{} lambda={lam}: immanant {direct} vs orientations {via}",
                    describe(&g)
                ));
            }
            let poly = census.polynomial(&chi).expect("sizes match");
            for r in 0..=n {
                let via = coefficient_via_orientations(&g, &lam, r).expect("bipartite");
                if poly.coefficient(r) != &via {
                    failures.push(format!(
                        "{} lambda={lam} r={r}: polynomial {} vs orientations {via}",
                        describe(&g),
                        poly.coefficient(r)
                    ));
                }
            }
        }
    }
    failures
}

fn nonnegativity_and_sandwiches() -> Failures {
    let mut failures = Vec::new();
    for g in bipartite_corpus() {
        let n = g.n();
        let l = g.laplacian();
        let census = PermutationCensus::new(&l);
        let det_poly = census
            .polynomial(&inverse_frobenius(Basis::Schur, &Partition::column(n)))
            .unwrap();
        let perm_poly = census
            .polynomial(&inverse_frobenius(Basis::Schur, &Partition::row(n)))
            .unwrap();
        let det = ExactRational::from_integer(determinant_exact(&l));
        let perm = ExactRational::from_integer(permanent_exact(&l));
        for lam in enumerate_partitions(n) {
            let chi = inverse_frobenius(Basis::Schur, &lam);
            let poly = census.polynomial(&chi).unwrap();
            for r in 0..=n {
                let b = poly.coefficient(r);
                if b.is_negative() {
                    failures.push(format!("{} lambda={lam} r={r}: b = {b} < 0", describe(&g)));
                }
                let normalized = ExactRational::new(b.clone(), chi.at_identity().clone());
                let low = ExactRational::from_integer(det_poly.coefficient(r).clone());
                let high = ExactRational::from_integer(perm_poly.coefficient(r).clone());
                if normalized < low || normalized > high {
                    failures.push(format!(
                        "{} lambda={lam} r={r}: {normalized} outside [{low}, {high}]",
                        describe(&g)
                    ));
                }
            }
            let value = normalized_immanant(&l, &lam).unwrap();
            if value < det || value > perm {
                failures.push(format!(
                    "{} lambda={lam}: normalized immanant {value} outside [{det}, {perm}]",
                    describe(&g)
                ));
            }
        }
    }
    failures
}

fn cover_pairs(h: &HasseDiagram) -> Vec<(Graph, Graph)> {
    h.covers
        .iter()
        .map(|c| {
            let lower = h.nodes[c.lower].graph.clone();
            let upper = ggs(&lower, &c.witness).expect("witness applies to its lower end");
            assert_eq!(
                canonical_form(&upper).unwrap(),
                h.nodes[c.upper].canonical,
                "witness lands on the cover's upper end"
            );
            (lower, upper)
        })
        .collect()
}

fn main_monotonicity() -> Failures {
    let mut failures = Vec::new();
    for spec in [FamilySpec::Unicyclic { n: 8, k: 4 }, FamilySpec::Trees { n: 7 }] {
        let h = build_poset(spec).expect("family within caps");
        let n = spec.n();
        for (lower, upper) in cover_pairs(&h) {
            let a_lower = count_b_types_all(&lower).unwrap();
            let a_upper = count_b_types_all(&upper).unwrap();
            for r in 0..=n {
                for mu in enumerate_partitions(n) {
                    let (below, above) = (a_lower[r].get(&mu), a_upper[r].get(&mu));
                    if above > below {
                        failures.push(format!(
                            "{spec} {} -> {}: a_r({mu}) with r={r} rises {below} -> {above}",
                            describe(&lower),
                            describe(&upper)
                        ));
                    }
                }
            }
            let census_lower = PermutationCensus::new(&lower.laplacian());
            let census_upper = PermutationCensus::new(&upper.laplacian());
            for basis in [Basis::Schur, Basis::Elementary, Basis::PowerSum, Basis::Homogeneous] {
                for lam in enumerate_partitions(n) {
                    let f = inverse_frobenius(basis, &lam);
                    let below = census_lower.polynomial(&f).unwrap();
                    let above = census_upper.polynomial(&f).unwrap();
                    for r in 0..=n {
                        if above.coefficient(r) > below.coefficient(r) {
                            failures.push(format!(
                                "{spec} {}: b({basis}_{lam}, r={r}) rises {} -> {}",
                                describe(&lower),
                                below.coefficient(r),
                                above.coefficient(r)
                            ));
                        }
                    }
                }
            }
        }
    }
    failures
}

fn sign_polynomial(g: &Graph) -> Vec<BigInt> {
    let sign = inverse_frobenius(Basis::Schur, &Partition::column(g.n()));
    PermutationCensus::new(&g.laplacian())
        .polynomial(&sign)
        .unwrap()
        .coeffs()
        .to_vec()
}

fn tree_bounds() -> Failures {
    let mut failures = Vec::new();
    let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    if sign_polynomial(&Graph::star(4)) != ints(&[1, 6, 9, 4, 0]) {
        failures.push(format!("S_4: {:?}", sign_polynomial(&Graph::star(4))));
    }
    if sign_polynomial(&Graph::path(4)) != ints(&[1, 6, 10, 4, 0]) {
        failures.push(format!("P_4: {:?}", sign_polynomial(&Graph::path(4))));
    }
    let n = 7;
    let trees = enumerate_family(FamilySpec::Trees { n }).unwrap();
    if trees.len() != 11 {
        failures.push(format!("expected 11 trees on 7 vertices, found {}", trees.len()));
    }
    let star = sign_polynomial(&Graph::star(n));
    let path = sign_polynomial(&Graph::path(n));
    for t in &trees {
        let b = sign_polynomial(t);
        for r in 0..=n {
            if !(star[r] <= b[r] && b[r] <= path[r]) {
                failures.push(format!(
                    "{} r={r}: {} not in [{}, {}]",
                    describe(t),
                    b[r],
                    star[r],
                    path[r]
                ));
            }
        }
    }
    failures
}

/// A 4-cycle with `tree` glued at vertex 0 by its own vertex 0.
fn cycle_with(tree: &Graph) -> Graph {
    let k = 4;
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let relabel = |v: usize| if v == 0 { 0 } else { v + k - 1 };
    edges.extend(tree.edges().into_iter().map(|(u, v)| (relabel(u), relabel(v))));
    Graph::from_edges(k + tree.n() - 1, &edges).unwrap()
}

fn poset_structure() -> Failures {
    let mut failures = Vec::new();
    let mut expect = |spec: FamilySpec, size: usize, top: Graph, bottom: Graph| {
        let h = build_poset(spec).unwrap();
        if h.len() != size {
            failures.push(format!("{spec}: {} nodes, expected {size}", h.len()));
        }
        let (maximal, minimal) = h.extremal_elements();
        let forms = |ids: &[usize]| ids.iter().map(|&i| h.nodes[i].canonical.clone()).collect::<Vec<_>>();
        if forms(&maximal) != vec![canonical_form(&top).unwrap()] {
            failures.push(format!("{spec}: maximal elements {:?}", forms(&maximal)));
        }
        if forms(&minimal) != vec![canonical_form(&bottom).unwrap()] {
            failures.push(format!("{spec}: minimal elements {:?}", forms(&minimal)));
        }
    };
    expect(
        FamilySpec::Unicyclic { n: 8, k: 4 },
        9,
        cycle_with(&Graph::star(5)),
        cycle_with(&Graph::path(5)),
    );
    expect(FamilySpec::Trees { n: 6 }, 6, Graph::star(6), Graph::path(6));
    failures
}

fn partial_orientations(g: &Graph) -> Vec<VertexOrientation> {
    let mut out: Vec<Vec<Option<usize>>> = vec![Vec::new()];
    for v in 0..g.n() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                std::iter::once(None)
                    .chain(g.neighbors(v).iter().copied().map(Some))
                    .map(move |choice| {
                        let mut next = prefix.clone();
                        next.push(choice);
                        next
                    })
            })
            .collect();
    }
    out.into_iter().map(|a| VertexOrientation::new(g, a).unwrap()).collect()
}

fn transport() -> Failures {
    let mut failures = Vec::new();
    let h = build_poset(FamilySpec::Unicyclic { n: 8, k: 4 }).unwrap();
    for c in &h.covers {
        let g1 = &h.nodes[c.lower].graph;
        let g2 = ggs(g1, &c.witness).unwrap();
        let mut seen = HashSet::new();
        for o in partial_orientations(&g2) {
            let image = match transport_delta(g1, &c.witness, &o) {
                Ok(image) => image,
                Err(e) => {
                    failures.push(format!("move {}: {e}", c.witness));
                    continue;
                }
            };
            let ty = classify_type(&g2, &o).unwrap();
            let image_ty = classify_type(g1, &image).unwrap();
            if ty != image_ty || o.domain_size() != image.domain_size() {
                failures.push(format!("move {}: type {ty} maps to {image_ty}", c.witness));
            }
            if !seen.insert((o.domain_size(), ty, image)) {
                failures.push(format!("move {}: two orientations share an image", c.witness));
            }
        }
    }
    failures
}

fn spectral_and_wiener() -> Failures {
    let mut failures = Vec::new();
    let tol = 1e-8;
    let sqrt3 = 3f64.sqrt();
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    if (spectral_radius(&Graph::star(4)).unwrap() - sqrt3).abs() > tol
        || (spectral_radius(&Graph::path(4)).unwrap() - golden).abs() > tol
    {
        failures.push("spectral radius of S_4 or P_4 off its closed form".into());
    }
    if wiener_index(&Graph::path(4)).unwrap() != 10 || wiener_index(&Graph::star(4)).unwrap() != 9 {
        failures.push("Wiener index of P_4 or S_4 off".into());
    }
    for k in 3..=5 {
        for n in k + 1..=9 {
            let spec = FamilySpec::Unicyclic { n, k };
            let h = build_poset(spec).unwrap();
            for (lower, upper) in cover_pairs(&h) {
                let (s1, s2) = (spectral_radius(&lower).unwrap(), spectral_radius(&upper).unwrap());
                if s1 > s2 + tol {
                    failures.push(format!(
                        "{spec} {}: spectral radius falls {s1} -> {s2}",
                        describe(&lower)
                    ));
                }
                let (w1, w2) = (wiener_index(&lower).unwrap(), wiener_index(&upper).unwrap());
                if w1 < w2 {
                    failures.push(format!("{spec} {}: Wiener index rises {w1} -> {w2}", describe(&lower)));
                }
            }
        }
    }
    failures
}

fn character_sanity() -> Failures {
    let mut failures = Vec::new();
    for n in 1..=8 {
        let table = CharacterTable::new(n);
        let parts = table.partitions();
        let size = parts.len();
        let identity = size - 1;
        let factorial: BigInt = (1..=n).map(BigInt::from).product();
        let dims: BigInt = (0..size).map(|l| table.entry(l, identity).pow(2)).sum();
        if dims != factorial {
            failures.push(format!("n={n}: sum of squared degrees {dims} != {factorial}"));
        }
        let z: Vec<BigInt> = parts.iter().map(z_value).collect();
        for a in 0..size {
            for b in 0..size {
                // rows: Σ_ν χ_a(ν) χ_b(ν) n!/z_ν = n! δ_ab
                let rows: BigInt = (0..size)
                    .map(|nu| table.entry(a, nu) * table.entry(b, nu) * (&factorial / &z[nu]))
                    .sum();
                let expected_rows = if a == b { factorial.clone() } else { BigInt::zero() };
                if rows != expected_rows {
                    failures.push(format!("n={n}: row orthogonality fails for {} {}", parts[a], parts[b]));
                }
                let cols: BigInt = (0..size).map(|l| table.entry(l, a) * table.entry(l, b)).sum();
                let expected_cols = if a == b { z[a].clone() } else { BigInt::zero() };
                if cols != expected_cols {
                    failures.push(format!(
                        "n={n}: column orthogonality fails for {} {}",
                        parts[a], parts[b]
                    ));
                }
            }
        }
    }
    for n in 1..=7 {
        for lam in enumerate_partitions(n) {
            for mu in enumerate_partitions(n) {
                let a = alpha_tau(Basis::Schur, &lam, &mu).unwrap();
                if a.is_negative() {
                    failures.push(format!("alpha({lam}, {mu}) = {a}"));
                }
            }
        }
    }
    failures
}

fn main() {
    let results = [
        run(
            1,
            "monomial alpha table at n = 4 matches the printed values",
            Some(Duration::from_secs(1)),
            table_of_monomial_alphas,
        ),
        run(
            2,
            "orientation formulas equal immanants and coefficients on connected bipartite graphs, n <= 6",
            None,
            orientation_oracle,
        ),
        run(
            3,
            "coefficient nonnegativity, normalized coefficient sandwich, det <= normalized immanant <= perm",
            None,
            nonnegativity_and_sandwiches,
        ),
        run(
            4,
            "censuses and s/e/p/h coefficients do not increase along shift covers",
            None,
            main_monotonicity,
        ),
        run(
            5,
            "star and path bound the characteristic coefficients of all trees on 7 vertices",
            None,
            tree_bounds,
        ),
        run(6, "family sizes and unique extremal elements", None, poset_structure),
        run(
            7,
            "orientation transport is type preserving and injective on all covers",
            None,
            transport,
        ),
        run(
            8,
            "spectral radius rises and Wiener index falls along unicyclic covers",
            None,
            spectral_and_wiener,
        ),
        run(
            9,
            "character degrees, orthogonality and alpha nonnegativity",
            None,
            character_sanity,
        ),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
