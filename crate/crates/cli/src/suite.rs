//! The verification suite: independent checks, run on a worker pool and
//! reported in a fixed order.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use lapimm::combinat::{alpha, alpha_tau, enumerate_partitions, inverse_frobenius, Basis, Partition, SymmetricGroup};
use lapimm::graph::{
    canonical_form, connected_bipartite_graphs, spectral_radius_with, wiener_index, POWER_ITERATION_CAP,
};
use lapimm::imm::{determinant_exact, permanent_exact, ExactRational, PermutationCensus};
use lapimm::orient::{
    classify_type, count_b_types_all_capped, count_full_types_capped, transport_delta, VertexOrientation,
};
use lapimm::poset::{build_poset, FamilySpec, HasseDiagram};
use lapimm::shift::ggs;
use lapimm::{Graph, IntMatrix};
use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;

use crate::config::SuiteConfig;
use crate::{CliError, CliResult};

/// Every check, in report order.
pub const CHECK_IDS: [&str; 11] = [
    "monomial-table",
    "orientation-oracle",
    "gmf-oracle",
    "nonnegativity",
    "immanant-sandwich",
    "coefficient-sandwich",
    "cover-monotonicity",
    "transport",
    "spectral-wiener",
    "extremes",
    "tree-bounds",
];

/// Mismatches kept per check; the rest are only counted.
const KEPT_MISMATCHES: usize = 50;
/// Mismatches printed per check.
const SHOWN_MISMATCHES: usize = 8;

/// Trees on `n` vertices, up to isomorphism.
const TREE_COUNTS: [usize; 13] = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
/// Rooted trees on `n` vertices, up to isomorphism.
const ROOTED_TREE_COUNTS: [usize; 11] = [0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug)]
pub struct CheckReport {
    pub id: &'static str,
    pub instances: usize,
    pub failed: usize,
    pub mismatches: Vec<Mismatch>,
    pub error: Option<CliError>,
    /// Command line that reruns just this check; set on failure.
    pub repro: Option<String>,
    pub wall: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.error.is_none()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return writeln!(f, "PASS {}: {} instances", self.id, self.instances);
        }
        match &self.error {
            Some(e) => writeln!(f, "FAIL {}: error: {e}", self.id)?,
            None => writeln!(f, "FAIL {}: {} of {} instances", self.id, self.failed, self.instances)?,
        }
        for m in self.mismatches.iter().take(SHOWN_MISMATCHES) {
            writeln!(f, "  {}: expected {}, actual {}", m.instance, m.expected, m.actual)?;
        }
        if self.failed > SHOWN_MISMATCHES {
            writeln!(f, "  ... {} more", self.failed - SHOWN_MISMATCHES)?;
        }
        if let Some(repro) = &self.repro {
            writeln!(f, "  repro: {repro}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tally {
    instances: usize,
    failed: usize,
    mismatches: Vec<Mismatch>,
}

impl Tally {
    fn expect(&mut self, ok: bool, mismatch: impl FnOnce() -> (String, String, String)) {
        self.instances += 1;
        if !ok {
            self.failed += 1;
            if self.mismatches.len() < KEPT_MISMATCHES {
                let (instance, expected, actual) = mismatch();
                self.mismatches.push(Mismatch {
                    instance,
                    expected,
                    actual,
                });
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.instances += other.instances;
        self.failed += other.failed;
        let room = KEPT_MISMATCHES.saturating_sub(self.mismatches.len());
        self.mismatches.extend(other.mismatches.into_iter().take(room));
    }
}

/// Shared inputs, built once per run.
struct Context<'a> {
    cfg: &'a SuiteConfig,
    corpus: Vec<Graph>,
}

impl Context<'_> {
    fn laplacian(&self, g: &Graph) -> IntMatrix {
        let mut l = g.laplacian();
        if self.cfg.inject_fault && l.n() > 0 {
            l.set(0, 0, l.get(0, 0) ^ 1);
        }
        l
    }

    fn census(&self, g: &Graph) -> PermutationCensus {
        PermutationCensus::new(&self.laplacian(g))
    }

    /// Configured bases except the monomial one, which has no sign or
    /// monotonicity guarantee.
    fn positive_bases(&self) -> Vec<Basis> {
        self.cfg
            .bases
            .iter()
            .copied()
            .filter(|&b| b != Basis::Monomial)
            .collect()
    }

    /// Trees at `max_n` plus the configured families with an even cycle.
    /// The orientation arguments need bipartite graphs.
    fn bipartite_posets(&self) -> CliResult<Vec<(FamilySpec, HasseDiagram)>> {
        let mut specs = vec![FamilySpec::Trees { n: self.cfg.max_n }];
        specs.extend(self.bipartite_families());
        specs.into_iter().map(|s| Ok((s, build_poset(s)?))).collect()
    }

    fn bipartite_families(&self) -> impl Iterator<Item = FamilySpec> + '_ {
        self.cfg
            .families
            .iter()
            .copied()
            .filter(|f| !matches!(f, FamilySpec::Unicyclic { k, .. } if k % 2 == 1))
    }

    fn unicyclic_posets(&self) -> CliResult<Vec<(FamilySpec, HasseDiagram)>> {
        self.cfg.families.iter().map(|&s| Ok((s, build_poset(s)?))).collect()
    }
}

pub fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn triple(instance: String, expected: impl fmt::Display, actual: impl fmt::Display) -> (String, String, String) {
    (instance, expected.to_string(), actual.to_string())
}

fn monomial_table(_: &Context) -> CliResult<Tally> {
    // rows and columns in the order 1^4, 2 1^2, 2^2, 3 1, 4
    let order = ["1,1,1,1", "2,1,1", "2,2", "3,1", "4"];
    let printed: [[i64; 5]; 5] = [
        [1, 0, 0, 0, -1],
        [0, 0, 0, 0, 4],
        [0, 0, 0, 0, -2],
        [0, 0, 0, 0, -4],
        [0, 0, 0, 0, 4],
    ];
    let parts: Vec<Partition> = order.iter().map(|s| s.parse().expect("literal partition")).collect();
    let mut tally = Tally::default();
    for (lam, row) in parts.iter().zip(printed) {
        for (mu, want) in parts.iter().zip(row) {
            let got = alpha_tau(Basis::Monomial, lam, mu)?;
            tally.expect(got == BigInt::from(want), || {
                let instance = format!(
                    "alpha_mu(m_lambda) lambda={} mu={}",
                    lam.to_exponential_string(),
                    mu.to_exponential_string()
                );
                triple(instance, want, &got)
            });
        }
    }
    Ok(tally)
}

fn orientation_oracle(ctx: &Context) -> CliResult<Tally> {
    let tallies: Vec<CliResult<Tally>> = ctx
        .corpus
        .par_iter()
        .map(|g| {
            let mut tally = Tally::default();
            let n = g.n();
            let census = ctx.census(g);
            let full = count_full_types_capped(g, ctx.cfg.enumeration_cap)?;
            let partial = count_b_types_all_capped(g, ctx.cfg.enumeration_cap)?;
            for lam in enumerate_partitions(n) {
                let chi = inverse_frobenius(Basis::Schur, &lam);
                let direct = census.immanant(&chi)?;
                let via = full.pair_with(|mu| alpha(&lam, mu))?;
                tally.expect(direct == via, || {
                    triple(format!("{} lambda={lam} immanant", describe(g)), &via, &direct)
                });
                let poly = census.polynomial(&chi)?;
                for (r, census_r) in partial.iter().enumerate() {
                    let via = census_r.pair_with(|mu| alpha(&lam, mu))?;
                    tally.expect(poly.coefficient(r) == &via, || {
                        triple(
                            format!("{} lambda={lam} r={r} coefficient", describe(g)),
                            &via,
                            poly.coefficient(r),
                        )
                    });
                }
            }
            Ok(tally)
        })
        .collect();
    merge_all(tallies)
}

/// The same pairing for the other bases, monomial included.
fn gmf_oracle(ctx: &Context) -> CliResult<Tally> {
    let mut bases: Vec<Basis> = ctx.cfg.bases.iter().copied().filter(|&b| b != Basis::Schur).collect();
    if !bases.contains(&Basis::Monomial) {
        bases.push(Basis::Monomial);
    }
    let tallies: Vec<CliResult<Tally>> = ctx
        .corpus
        .par_iter()
        .map(|g| {
            let mut tally = Tally::default();
            let census = ctx.census(g);
            let partial = count_b_types_all_capped(g, ctx.cfg.enumeration_cap)?;
            for &basis in &bases {
                for lam in enumerate_partitions(g.n()) {
                    let poly = census.polynomial(&inverse_frobenius(basis, &lam))?;
                    for (r, census_r) in partial.iter().enumerate() {
                        let via = census_r.pair_with(|mu| alpha_tau(basis, &lam, mu))?;
                        tally.expect(poly.coefficient(r) == &via, || {
                            triple(
                                format!("{} {basis}_{lam} r={r}", describe(g)),
                                &via,
                                poly.coefficient(r),
                            )
                        });
                    }
                }
            }
            Ok(tally)
        })
        .collect();
    merge_all(tallies)
}

fn nonnegativity(ctx: &Context) -> CliResult<Tally> {
    let bases = ctx.positive_bases();
    let mut tally = Tally::default();
    for n in 1..=ctx.cfg.max_n {
        let group = SymmetricGroup::get(n);
        for &basis in &bases {
            for (li, lam) in group.partitions().iter().enumerate() {
                let f = group.inverse_frobenius_at(basis, li);
                for (mi, mu) in group.partitions().iter().enumerate() {
                    let a = group.binomial_pairing(&f, mi);
                    tally.expect(!a.is_negative(), || {
                        triple(format!("alpha_{mu}({basis}_{lam})"), ">= 0", &a)
                    });
                }
            }
        }
    }
    let tallies: Vec<CliResult<Tally>> = ctx
        .corpus
        .par_iter()
        .map(|g| {
            let mut tally = Tally::default();
            let census = ctx.census(g);
            for &basis in &bases {
                for lam in enumerate_partitions(g.n()) {
                    let poly = census.polynomial(&inverse_frobenius(basis, &lam))?;
                    for (r, b) in poly.coeffs().iter().enumerate() {
                        tally.expect(!b.is_negative(), || {
                            triple(format!("{} {basis}_{lam} r={r}", describe(g)), ">= 0", b)
                        });
                    }
                }
            }
            Ok(tally)
        })
        .collect();
    tally.merge(merge_all(tallies)?);
    Ok(tally)
}

fn immanant_sandwich(ctx: &Context) -> CliResult<Tally> {
    let tallies: Vec<CliResult<Tally>> = ctx
        .corpus
        .par_iter()
        .map(|g| {
            let mut tally = Tally::default();
            let l = ctx.laplacian(g);
            let census = PermutationCensus::new(&l);
            let det = ExactRational::from_integer(determinant_exact(&l));
            let perm = ExactRational::from_integer(permanent_exact(&l));
            for lam in enumerate_partitions(g.n()) {
                let chi = inverse_frobenius(Basis::Schur, &lam);
                let value = ExactRational::new(census.immanant(&chi)?, chi.at_identity().clone());
                tally.expect(det <= value && value <= perm, || {
                    triple(
                        format!("{} lambda={lam} normalized immanant", describe(g)),
                        format!("[{det}, {perm}]"),
                        &value,
                    )
                });
            }
            Ok(tally)
        })
        .collect();
    merge_all(tallies)
}

fn coefficient_sandwich(ctx: &Context) -> CliResult<Tally> {
    let tallies: Vec<CliResult<Tally>> = ctx
        .corpus
        .par_iter()
        .map(|g| {
            let mut tally = Tally::default();
            let n = g.n();
            let census = ctx.census(g);
            let low = census.polynomial(&inverse_frobenius(Basis::Schur, &Partition::column(n)))?;
            let high = census.polynomial(&inverse_frobenius(Basis::Schur, &Partition::row(n)))?;
            for lam in enumerate_partitions(n) {
                let chi = inverse_frobenius(Basis::Schur, &lam);
                let poly = census.polynomial(&chi)?;
                for r in 0..=n {
                    let value = ExactRational::new(poly.coefficient(r).clone(), chi.at_identity().clone());
                    let lo = ExactRational::from_integer(low.coefficient(r).clone());
                    let hi = ExactRational::from_integer(high.coefficient(r).clone());
                    tally.expect(lo <= value && value <= hi, || {
                        triple(
                            format!("{} lambda={lam} r={r} normalized", describe(g)),
                            format!("[{lo}, {hi}]"),
                            &value,
                        )
                    });
                }
            }
            Ok(tally)
        })
        .collect();
    merge_all(tallies)
}

/// Every cover as `(lower graph, upper graph, witness line)`.
fn cover_pairs(h: &HasseDiagram) -> CliResult<Vec<(Graph, Graph, String)>> {
    h.covers
        .iter()
        .map(|c| {
            let lower = h.nodes[c.lower].graph.clone();
            let upper = ggs(&lower, &c.witness)?;
            Ok((lower, upper, c.witness.to_string()))
        })
        .collect()
}

fn cover_monotonicity(ctx: &Context) -> CliResult<Tally> {
    let bases = ctx.positive_bases();
    let mut pairs = Vec::new();
    for (spec, h) in ctx.bipartite_posets()? {
        pairs.extend(cover_pairs(&h)?.into_iter().map(|p| (spec, p)));
    }
    let tallies: Vec<CliResult<Tally>> = pairs
        .par_iter()
        .map(|(spec, (lower, upper, witness))| {
            let mut tally = Tally::default();
            let n = spec.n();
            let here = || format!("{spec} {} move {witness}", describe(lower));
            let a_lower = count_b_types_all_capped(lower, ctx.cfg.enumeration_cap)?;
            let a_upper = count_b_types_all_capped(upper, ctx.cfg.enumeration_cap)?;
            for r in 0..=n {
                for mu in enumerate_partitions(n) {
                    let (below, above) = (a_lower[r].get(&mu), a_upper[r].get(&mu));
                    tally.expect(above <= below, || {
                        triple(format!("{} a_r({mu}) r={r}", here()), format!("<= {below}"), above)
                    });
                }
            }
            let (c_lower, c_upper) = (ctx.census(lower), ctx.census(upper));
            for &basis in &bases {
                for lam in enumerate_partitions(n) {
                    let f = inverse_frobenius(basis, &lam);
                    let (below, above) = (c_lower.polynomial(&f)?, c_upper.polynomial(&f)?);
                    for r in 0..=n {
                        let (b, a) = (below.coefficient(r), above.coefficient(r));
                        tally.expect(a <= b, || {
                            triple(format!("{} b({basis}_{lam}) r={r}", here()), format!("<= {b}"), a)
                        });
                    }
                }
            }
            Ok(tally)
        })
        .collect();
    merge_all(tallies)
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
    out.into_iter()
        .map(|a| VertexOrientation::new(g, a).expect("arrows follow edges"))
        .collect()
}

fn transport(ctx: &Context) -> CliResult<Tally> {
    let mut work = Vec::new();
    for spec in ctx.bipartite_families() {
        let h = build_poset(spec)?;
        for c in &h.covers {
            work.push((spec, h.nodes[c.lower].graph.clone(), c.witness.clone()));
        }
    }
    let tallies: Vec<CliResult<Tally>> = work
        .par_iter()
        .map(|(spec, g1, mv)| {
            let mut tally = Tally::default();
            let g2 = ggs(g1, mv)?;
            let size: u128 = (0..g2.n()).map(|v| 1 + g2.degree(v) as u128).product();
            if size > ctx.cfg.enumeration_cap {
                return Err(lapimm::Error::Capacity {
                    what: "partial orientations for transport",
                    requested: size,
                    limit: ctx.cfg.enumeration_cap,
                }
                .into());
            }
            let here = format!("{spec} {} move {mv}", describe(g1));
            let mut seen = HashSet::new();
            for o in partial_orientations(&g2) {
                let ty = classify_type(&g2, &o)?;
                match transport_delta(g1, mv, &o) {
                    Ok(image) => {
                        let image_ty = classify_type(g1, &image)?;
                        tally.expect(ty == image_ty && o.domain_size() == image.domain_size(), || {
                            triple(
                                format!("{here} type"),
                                format!("{ty} on {}", o.domain_size()),
                                format!("{image_ty} on {}", image.domain_size()),
                            )
                        });
                        let fresh = seen.insert((o.domain_size(), ty.clone(), image));
                        tally.expect(fresh, || {
                            triple(format!("{here} injectivity"), "distinct image", "repeated image")
                        });
                    }
                    Err(e) => tally.expect(false, || triple(format!("{here} type {ty}"), "image", e)),
                }
            }
            Ok(tally)
        })
        .collect();
    merge_all(tallies)
}

fn spectral_wiener(ctx: &Context) -> CliResult<Tally> {
    let tol = ctx.cfg.spectral_tol;
    let radius = |g: &Graph| spectral_radius_with(g, tol * 1e-2, POWER_ITERATION_CAP);
    let mut tally = Tally::default();
    let pinned = [
        ("star S4", Graph::star(4), 3f64.sqrt(), 9u64),
        ("path P4", Graph::path(4), (1.0 + 5f64.sqrt()) / 2.0, 10u64),
    ];
    for (name, g, sigma, wiener) in &pinned {
        let got = radius(g)?;
        tally.expect((got - sigma).abs() <= tol, || {
            triple(format!("{name} spectral radius"), sigma, got)
        });
        let got = wiener_index(g)?;
        tally.expect(got == *wiener, || triple(format!("{name} Wiener index"), wiener, got));
    }
    let mut pairs = Vec::new();
    for (spec, h) in ctx.unicyclic_posets()? {
        pairs.extend(cover_pairs(&h)?.into_iter().map(|p| (spec, p)));
    }
    let tallies: Vec<CliResult<Tally>> = pairs
        .par_iter()
        .map(|(spec, (lower, upper, witness))| {
            let mut tally = Tally::default();
            let here = format!("{spec} {} move {witness}", describe(lower));
            let (s1, s2) = (radius(lower)?, radius(upper)?);
            tally.expect(s1 <= s2 + tol, || {
                triple(format!("{here} spectral radius"), format!(">= {s1}"), s2)
            });
            let (w1, w2) = (wiener_index(lower)?, wiener_index(upper)?);
            tally.expect(w1 >= w2, || {
                triple(format!("{here} Wiener index"), format!("<= {w1}"), w2)
            });
            Ok(tally)
        })
        .collect();
    tally.merge(merge_all(tallies)?);
    Ok(tally)
}

/// A `k`-cycle with `tree` glued at its vertex 0.
fn cycle_with(k: usize, tree: &Graph) -> CliResult<Graph> {
    let mut edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    let relabel = |v: usize| if v == 0 { 0 } else { v + k - 1 };
    edges.extend(tree.edges().into_iter().map(|(u, v)| (relabel(u), relabel(v))));
    Ok(Graph::from_edges(k + tree.n() - 1, &edges)?)
}

fn extremes(ctx: &Context) -> CliResult<Tally> {
    let mut specs: Vec<(FamilySpec, usize, Graph, Graph)> = Vec::new();
    for (n, &count) in TREE_COUNTS.iter().enumerate().take(ctx.cfg.max_n + 1).skip(4) {
        specs.push((FamilySpec::Trees { n }, count, Graph::star(n), Graph::path(n)));
    }
    for &spec in &ctx.cfg.families {
        if let FamilySpec::Unicyclic { n, k } = spec {
            let m = n - k + 1;
            let size = ROOTED_TREE_COUNTS.get(m).copied().unwrap_or(0);
            specs.push((
                spec,
                size,
                cycle_with(k, &Graph::star(m))?,
                cycle_with(k, &Graph::path(m))?,
            ));
        }
    }
    let mut tally = Tally::default();
    for (spec, size, top, bottom) in specs {
        let h = build_poset(spec)?;
        tally.expect(h.len() == size, || triple(format!("{spec} size"), size, h.len()));
        let (maximal, minimal) = h.extremal_elements();
        let forms = |ids: &[usize]| {
            ids.iter()
                .map(|&i| h.nodes[i].canonical.clone())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let (top, bottom) = (canonical_form(&top)?, canonical_form(&bottom)?);
        tally.expect(forms(&maximal) == top, || {
            triple(format!("{spec} maximal elements"), &top, forms(&maximal))
        });
        tally.expect(forms(&minimal) == bottom, || {
            triple(format!("{spec} minimal elements"), &bottom, forms(&minimal))
        });
    }
    Ok(tally)
}

fn tree_bounds(ctx: &Context) -> CliResult<Tally> {
    let sign_coeffs = |g: &Graph| -> CliResult<Vec<BigInt>> {
        let sign = inverse_frobenius(Basis::Schur, &Partition::column(g.n()));
        Ok(ctx.census(g).polynomial(&sign)?.coeffs().to_vec())
    };
    let show = |v: &[BigInt]| v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",");
    let mut tally = Tally::default();
    for (name, g, want) in [
        ("star S4", Graph::star(4), "1,6,9,4,0"),
        ("path P4", Graph::path(4), "1,6,10,4,0"),
    ] {
        let got = show(&sign_coeffs(&g)?);
        tally.expect(got == want, || {
            triple(format!("{name} characteristic coefficients"), want, &got)
        });
    }
    let n = ctx.cfg.max_n;
    let trees: Vec<Graph> = build_poset(FamilySpec::Trees { n })?
        .nodes
        .into_iter()
        .map(|node| node.graph)
        .collect();
    let star = sign_coeffs(&Graph::star(n))?;
    let path = sign_coeffs(&Graph::path(n))?;
    for t in &trees {
        let b = sign_coeffs(t)?;
        for r in 0..=n {
            tally.expect(star[r] <= b[r] && b[r] <= path[r], || {
                triple(
                    format!("{} r={r}", describe(t)),
                    format!("[{}, {}]", star[r], path[r]),
                    &b[r],
                )
            });
        }
    }
    Ok(tally)
}

fn merge_all(tallies: Vec<CliResult<Tally>>) -> CliResult<Tally> {
    let mut total = Tally::default();
    for t in tallies {
        total.merge(t?);
    }
    Ok(total)
}

fn dispatch(id: &str, ctx: &Context) -> CliResult<Tally> {
    match id {
        "monomial-table" => monomial_table(ctx),
        "orientation-oracle" => orientation_oracle(ctx),
        "gmf-oracle" => gmf_oracle(ctx),
        "nonnegativity" => nonnegativity(ctx),
        "immanant-sandwich" => immanant_sandwich(ctx),
        "coefficient-sandwich" => coefficient_sandwich(ctx),
        "cover-monotonicity" => cover_monotonicity(ctx),
        "transport" => transport(ctx),
        "spectral-wiener" => spectral_wiener(ctx),
        "extremes" => extremes(ctx),
        "tree-bounds" => tree_bounds(ctx),
        other => Err(CliError::Usage(format!("unknown check {other:?}"))),
    }
}

/// Resolves `--only` and `--skip` lists against [`CHECK_IDS`].
pub fn select_checks(only: &[String], skip: &[String]) -> CliResult<Vec<&'static str>> {
    for id in only.iter().chain(skip) {
        if !CHECK_IDS.contains(&id.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown check {id:?} (known: {})",
                CHECK_IDS.join(", ")
            )));
        }
    }
    Ok(CHECK_IDS
        .iter()
        .copied()
        .filter(|id| only.is_empty() || only.iter().any(|o| o == id))
        .filter(|id| !skip.iter().any(|s| s == id))
        .collect())
}

/// Runs `checks` concurrently; reports come back in `checks` order.
pub fn run_suite(cfg: &SuiteConfig, checks: &[&'static str]) -> CliResult<Vec<CheckReport>> {
    cfg.validate()?;
    let corpus: Vec<Graph> = (1..=cfg.corpus_n)
        .map(connected_bipartite_graphs)
        .collect::<lapimm::Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let ctx = Context { cfg, corpus };
    let flags = cfg.to_flags();
    Ok(checks
        .par_iter()
        .map(|&id| {
            let start = Instant::now();
            let outcome = dispatch(id, &ctx);
            let wall = start.elapsed();
            let (tally, error) = match outcome {
                Ok(t) => (t, None),
                Err(e) => (Tally::default(), Some(e)),
            };
            let mut report = CheckReport {
                id,
                instances: tally.instances,
                failed: tally.failed,
                mismatches: tally.mismatches,
                error,
                repro: None,
                wall,
            };
            if !report.passed() {
                let mut line = format!("lapimm verify --only {id}");
                if !flags.is_empty() {
                    write!(line, " {flags}").expect("writing to a String");
                }
                report.repro = Some(line);
            }
            report
        })
        .collect())
}

/// The report text: one block per check, then a summary line.
pub fn render(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        write!(out, "{r}").expect("writing to a String");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "verify: {} passed, {failed} failed", reports.len() - failed).expect("writing to a String");
    out
}
