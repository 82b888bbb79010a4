//! Exhaustive sweeps checking the lattice-freeness equivalences instance by
//! instance, producing deterministic [`Report`]s.
//!
//! Instances are evaluated in parallel and merged in corpus order, so a report
//! depends only on the corpus and the seed. Wall time is recorded only when
//! [`SuiteOptions::timing`] is set.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    avoids_lattice_free_patterns, avoids_lattice_free_patterns_exhaustive, composition_avoids_02,
    criterion_check, hook_condition, rothe_diagram, skyline_diagram, Composition, CriterionMode,
    Diagram, Permutation,
};
use crate::ehrhart::{
    ehrhart_factorization_check, hull_ehrhart, loop_free_spanning_product_ehrhart,
    EhrhartPolynomial, FactorizationVerdict,
};
use crate::poly::{grothendieck, key, schubert};
use crate::polytope::{
    column_base_factors, column_loop_free_spanning_factors, column_spanning_factors,
    dilated_minkowski_points, gp_certificate, hull_lattice_points, key_closures,
    lattice_free_check, support_points, support_property_checks, vertices, Schubitope,
};

pub const DEFAULT_RANDOM_DIAGRAMS: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub check: String,
    pub detail: String,
    pub reproduce: String,
}

/// An observation worth recording that does not fail the suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub instance: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub corpus: String,
    pub seed: u64,
    pub n_instances: usize,
    pub n_failures: usize,
    pub status: Status,
    pub counts: BTreeMap<String, u64>,
    pub failures: Vec<Failure>,
    pub findings: Vec<Finding>,
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn count(&self, key: &str) -> u64 {
        self.counts.get(key).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub seed: u64,
    pub fail_fast: bool,
    pub timing: bool,
    /// Restrict the corpus to the instance with this key.
    pub only: Option<String>,
}

#[derive(Default)]
struct Outcome {
    failures: Vec<Failure>,
    findings: Vec<Finding>,
    tallies: Vec<&'static str>,
}

struct Instance<'a> {
    key: String,
    reproduce: &'a dyn Fn(&str) -> String,
    outcome: Outcome,
}

impl<'a> Instance<'a> {
    fn new(key: String, reproduce: &'a dyn Fn(&str) -> String) -> Self {
        Instance {
            key,
            reproduce,
            outcome: Outcome::default(),
        }
    }

    fn check(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.outcome.failures.push(Failure {
                instance: self.key.clone(),
                check: check.to_string(),
                detail: detail(),
                reproduce: (self.reproduce)(&self.key),
            });
        }
    }

    fn tally(&mut self, ok: bool, name: &'static str) {
        if ok {
            self.outcome.tallies.push(name);
        }
    }

    fn finding(&mut self, note: String) {
        self.outcome.findings.push(Finding {
            instance: self.key.clone(),
            note,
        });
    }

    fn ehrhart_ok(
        &mut self,
        label: &str,
        result: crate::Result<EhrhartPolynomial>,
    ) -> Option<EhrhartPolynomial> {
        match result {
            Ok(p) => {
                let c = p.constant_term();
                self.check(c.is_one(), "ehrhart-constant-term", || {
                    format!("{label}: constant term {c}")
                });
                Some(p)
            }
            Err(e) => {
                self.check(false, "ehrhart-integrity", || format!("{label}: {e}"));
                None
            }
        }
    }

    /// Runs the factorization check, recording integrity failures and the tally.
    fn factorization(&mut self, d: &Diagram) -> Option<FactorizationVerdict> {
        match ehrhart_factorization_check(d) {
            Ok(f) => {
                for (label, p) in [("lhs", &f.lhs), ("rhs", &f.rhs)] {
                    let c = p.constant_term();
                    self.check(c.is_one(), "ehrhart-constant-term", || {
                        format!("{label}: {c}")
                    });
                }
                self.tally(f.equal, "factorizes");
                Some(f)
            }
            Err(e) => {
                self.check(false, "ehrhart-integrity", || e.to_string());
                None
            }
        }
    }
}

fn run_suite<T: Sync>(
    suite: &str,
    corpus: String,
    opts: &SuiteOptions,
    instances: Vec<(String, T)>,
    evaluate: impl Fn(&mut Instance, &T) + Sync,
    reproduce: impl Fn(&str) -> String + Sync,
) -> Report {
    let start = Instant::now();
    let instances: Vec<(String, T)> = match &opts.only {
        Some(key) => instances.into_iter().filter(|(k, _)| k == key).collect(),
        None => instances,
    };
    let run_one = |(k, item): &(String, T)| {
        let mut inst = Instance::new(k.clone(), &reproduce);
        evaluate(&mut inst, item);
        inst.outcome
    };
    let outcomes: Vec<Outcome> = if opts.fail_fast {
        let mut out = Vec::new();
        for item in &instances {
            let o = run_one(item);
            let stop = !o.failures.is_empty();
            out.push(o);
            if stop {
                break;
            }
        }
        out
    } else {
        instances.par_iter().map(run_one).collect()
    };

    let mut counts = BTreeMap::new();
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    for o in &outcomes {
        for t in &o.tallies {
            *counts.entry(t.to_string()).or_insert(0) += 1;
        }
        failures.extend(o.failures.iter().cloned());
        findings.extend(o.findings.iter().cloned());
    }
    failures.sort_by(|a, b| (&a.instance, &a.check).cmp(&(&b.instance, &b.check)));
    findings.sort_by(|a, b| (&a.instance, &a.note).cmp(&(&b.instance, &b.note)));
    let n_failures = failures.len();
    Report {
        suite: suite.to_string(),
        corpus,
        seed: opts.seed,
        n_instances: outcomes.len(),
        n_failures,
        status: if n_failures == 0 {
            Status::Pass
        } else {
            Status::Fail
        },
        counts,
        failures,
        findings,
        elapsed_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    }
}

/// Diagrams for the criterion suite.
#[derive(Clone, Debug)]
pub struct DiagramCorpus {
    /// Every diagram in `[n] x [n]` for this `n`.
    pub exhaustive_n: usize,
    /// Grid size of the random diagrams.
    pub random_n: usize,
    pub random_count: usize,
}

impl Default for DiagramCorpus {
    fn default() -> Self {
        DiagramCorpus {
            exhaustive_n: 3,
            random_n: 4,
            random_count: DEFAULT_RANDOM_DIAGRAMS,
        }
    }
}

impl DiagramCorpus {
    pub fn diagrams(&self, seed: u64) -> Vec<Diagram> {
        let mut out = Diagram::all(self.exhaustive_n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        out.extend((0..self.random_count).map(|_| Diagram::random(self.random_n, &mut rng)));
        out
    }

    fn describe(&self) -> String {
        format!(
            "all {} diagrams in [{n}]x[{n}] + {} random diagrams in [{m}]x[{m}] (cells i.i.d. p=1/2, ChaCha8)",
            1u64 << (self.exhaustive_n * self.exhaustive_n),
            self.random_count,
            n = self.exhaustive_n,
            m = self.random_n
        )
    }
}

pub fn diagram_key(d: &Diagram) -> String {
    format!("n={}:{}", d.n(), d)
}

/// Parses a key produced by [`diagram_key`].
pub fn parse_diagram_key(key: &str) -> crate::Result<Diagram> {
    let (n, body) = key
        .strip_prefix("n=")
        .and_then(|r| r.split_once(':'))
        .ok_or_else(|| crate::Error::Parse(format!("bad diagram key {key:?}")))?;
    let n = n
        .parse()
        .map_err(|_| crate::Error::Parse(format!("bad diagram key {key:?}")))?;
    Diagram::parse(body, n)
}

/// Checks that both lattice-point backends agree on `t·S_D` for `t = 0..=max_t`.
fn check_backends(inst: &mut Instance, d: &Diagram, s: &Schubitope, max_t: u64) {
    let factors = column_base_factors(d);
    for t in 0..=max_t {
        let by_theta = s.points(t);
        let by_sum = dilated_minkowski_points(d.n(), &factors, t);
        inst.check(by_theta == by_sum, "backend-agreement", || {
            format!(
                "t={t}: θ backend {} points, Minkowski backend {}",
                by_theta.len(),
                by_sum.len()
            )
        });
    }
}

/// Criterion ⟺ lattice-free ⟺ Ehrhart factorization on every diagram of the corpus.
pub fn verify_schubitope_criterion(corpus: &DiagramCorpus, opts: &SuiteOptions) -> Report {
    let instances: Vec<(String, Diagram)> = corpus
        .diagrams(opts.seed)
        .into_iter()
        .map(|d| (diagram_key(&d), d))
        .collect();
    let seed = opts.seed;
    let random = corpus.random_count;
    run_suite(
        "criterion",
        corpus.describe(),
        opts,
        instances,
        |inst, d| {
            let s = Schubitope::new(d);
            let crit = criterion_check(d, CriterionMode::AtMostOne);
            let lf = lattice_free_check(&s.points(1));
            inst.tally(crit.ok, "criterion");
            inst.tally(lf.ok, "lattice_free");
            inst.check(crit.ok == lf.ok, "criterion-vs-lattice-free", || {
                format!("criterion {:?}, lattice-free {:?}", crit, lf)
            });
            if let Some(f) = inst.factorization(d) {
                inst.check(crit.ok == f.equal, "criterion-vs-ehrhart", || {
                    format!("criterion {}, lhs {}, rhs {}", crit.ok, f.lhs, f.rhs)
                });
            }
            check_backends(inst, d, &s, 3);
        },
        move |key| {
            format!("schubitope verify criterion --seed {seed} --random {random} --only '{key}'")
        },
    )
}

/// Four-way lattice-freeness equivalence over `S_n`, plus the hook and
/// pattern-implementation cross-checks, and SNP of Schubert polynomials for `n <= 5`.
pub fn verify_schubert_suite(n: usize, opts: &SuiteOptions) -> Report {
    let instances: Vec<(String, Permutation)> = Permutation::all(n)
        .into_iter()
        .map(|w| (w.to_string(), w))
        .collect();
    run_suite(
        "schubert",
        format!("all {} permutations in S_{n}", instances.len()),
        opts,
        instances,
        |inst, w| {
            let d = rothe_diagram(w);
            let s = Schubitope::new(&d);
            let pts = s.points(1);
            let lf = lattice_free_check(&pts).ok;
            let disjoint = criterion_check(&d, CriterionMode::Disjoint).ok;
            let at_most_one = criterion_check(&d, CriterionMode::AtMostOne).ok;
            let avoids = avoids_lattice_free_patterns(w);
            let avoids_alt = avoids_lattice_free_patterns_exhaustive(w);
            let hook = hook_condition(w);
            inst.check(avoids == avoids_alt, "pattern-implementations", || {
                format!("pruned search {avoids}, exhaustive {avoids_alt}")
            });
            if disjoint != at_most_one {
                inst.finding(format!(
                    "criterion modes differ: disjoint={disjoint}, at-most-one={at_most_one}"
                ));
            }
            let fact = inst.factorization(&d).map(|f| f.equal);
            inst.tally(lf, "lattice_free");
            inst.tally(avoids, "avoids_patterns");
            let verdicts = [
                ("lattice-free", Some(lf)),
                ("disjoint-intervals", Some(disjoint)),
                ("hook-condition", Some(hook)),
                ("ehrhart-factorization", fact),
            ];
            for (name, v) in verdicts {
                if let Some(v) = v {
                    inst.check(v == avoids, &format!("avoidance-vs-{name}"), || {
                        format!("avoids={avoids}, {name}={v}")
                    });
                }
            }
            if w.len() <= 5 {
                let supp = support_points(&schubert(w));
                inst.check(supp == pts, "schubert-snp", || {
                    format!(
                        "support {} points, Schubitope {} points",
                        supp.len(),
                        pts.len()
                    )
                });
            }
            check_backends(inst, &d, &s, if w.len() <= 5 { 3 } else { 1 });
        },
        move |key| format!("schubitope verify schubert --n {n} --only '{key}'"),
    )
}

/// Lattice-freeness of `Newton(𝔊_w)` against pattern avoidance, the
/// support properties for avoiding `w`, and the degree bounds for every `w`.
///
/// Spanning-set polytopes here use loop-free spanning sets, i.e. subsets of
/// `[max D_j]`. How often the sum over all of `[n]` differs is tallied.
pub fn verify_grothendieck_suite(n: usize, opts: &SuiteOptions) -> Report {
    let instances: Vec<(String, Permutation)> = Permutation::all(n)
        .into_iter()
        .map(|w| (w.to_string(), w))
        .collect();
    run_suite(
        "grothendieck",
        format!("all {} permutations in S_{n}", instances.len()),
        opts,
        instances,
        |inst, w| {
            let d = rothe_diagram(w);
            let g = grothendieck(w);
            let s = schubert(w);
            let gs = g.summary();
            let ss = s.summary();

            let weight: Vec<u32> = d
                .upper_closure_weight()
                .into_iter()
                .map(|v| v as u32)
                .collect();
            inst.check(
                gs.max_degrees == ss.max_degrees,
                "degree-bound-g-vs-s",
                || format!("d(G)={:?}, d(S)={:?}", gs.max_degrees, ss.max_degrees),
            );
            inst.check(
                ss.max_degrees == weight,
                "degree-bound-s-vs-closure",
                || format!("d(S)={:?}, wt={weight:?}", ss.max_degrees),
            );
            inst.check(
                gs.value_at_ones == BigInt::one(),
                "principal-specialization",
                || format!("G(1,...,1)={}", gs.value_at_ones),
            );
            inst.check(
                gs.lowest_component.as_ref() == Some(&*s),
                "lowest-component",
                || "lowest-degree component differs from the Schubert polynomial".into(),
            );

            let supp = support_points(&g);
            let hull = hull_lattice_points(&supp);
            let lf = lattice_free_check(&hull).ok;
            let avoids = avoids_lattice_free_patterns(w);
            inst.tally(lf, "lattice_free");
            inst.tally(avoids, "avoids_patterns");
            inst.check(lf == avoids, "lattice-free-vs-avoidance", || {
                format!("lattice-free={lf}, avoids={avoids}")
            });
            if !avoids {
                return;
            }

            let spanning_sum =
                dilated_minkowski_points(n, &column_loop_free_spanning_factors(&d), 1);
            inst.check(hull == spanning_sum, "newton-equals-spanning-sum", || {
                format!(
                    "Newton {} points, spanning sum {} points",
                    hull.len(),
                    spanning_sum.len()
                )
            });
            let full_sum = dilated_minkowski_points(n, &column_spanning_factors(&d), 1);
            inst.tally(full_sum != hull, "full_ground_spanning_sum_differs");
            let lhs = inst.ehrhart_ok("newton", hull_ehrhart(&supp));
            let rhs = inst.ehrhart_ok("spanning-product", loop_free_spanning_product_ehrhart(&d));
            if let (Some(lhs), Some(rhs)) = (lhs, rhs) {
                inst.check(lhs == rhs, "spanning-ehrhart-factorization", || {
                    format!("newton {lhs}, product {rhs}")
                });
            }
            let props = support_property_checks(&supp);
            inst.check(props.all(), "support-properties", || format!("{props:?}"));
            let gp = gp_certificate(&hull);
            inst.check(gp.ok, "gp-certificate", || {
                format!(
                    "supermodular={}, submodular={}, cross={}, region={}",
                    gp.supermodular, gp.submodular, gp.cross_inequality, gp.region_matches
                )
            });
            let top_terms = gs.top_component.as_ref().map_or(0, |p| p.len());
            inst.check(top_terms == 1, "top-component-single-term", || {
                format!("{top_terms} terms")
            });
            inst.check(
                gs.coefficient_sum == BigInt::one(),
                "coefficient-sum",
                || format!("sum={}", gs.coefficient_sum),
            );
        },
        move |key| format!("schubitope verify grothendieck --n {n} --only '{key}'"),
    )
}

/// Key-polynomial sweep over compositions with `len` parts in `0..=max_part`.
pub fn verify_key_suite(max_part: usize, len: usize, opts: &SuiteOptions) -> Report {
    let instances: Vec<(String, Composition)> = Composition::all(len, max_part)
        .into_iter()
        .map(|a| (a.to_string(), a))
        .collect();
    run_suite(
        "key",
        format!(
            "all {} compositions with {len} parts in 0..={max_part}",
            instances.len()
        ),
        opts,
        instances,
        |inst, alpha| {
            let d = match skyline_diagram(alpha) {
                Ok(d) => d,
                Err(e) => {
                    inst.check(false, "skyline", || e.to_string());
                    return;
                }
            };
            let s = Schubitope::new(&d);
            let pts = s.points(1);
            let lf = lattice_free_check(&pts).ok;
            let avoids = composition_avoids_02(alpha);
            inst.tally(lf, "lattice_free");
            inst.tally(avoids, "avoids_02");
            inst.check(lf == avoids, "lattice-free-vs-02", || {
                format!("lattice-free={lf}, avoids (0,2)={avoids}")
            });
            if let Some(f) = inst.factorization(&d) {
                inst.check(f.equal == avoids, "ehrhart-vs-02", || {
                    format!("factorizes={}, avoids (0,2)={avoids}", f.equal)
                });
            }

            let supp = support_points(&key(alpha));
            let hull = hull_lattice_points(&supp);
            let closures = key_closures(alpha);
            let verts = vertices(&hull);
            inst.check(verts == closures.vertices, "vertex-closure", || {
                format!("vertices {:?}, closure {:?}", verts, closures.vertices)
            });
            inst.check(hull == closures.lattice_points, "lattice-closure", || {
                format!(
                    "hull {} points, closure {} points",
                    hull.len(),
                    closures.lattice_points.len()
                )
            });
            inst.check(supp == hull, "key-snp", || {
                format!("support {} points, hull {} points", supp.len(), hull.len())
            });
            inst.check(supp == pts, "key-newton-is-schubitope", || {
                format!(
                    "support {} points, Schubitope {} points",
                    supp.len(),
                    pts.len()
                )
            });
        },
        move |key| {
            format!("schubitope verify key --max-part {max_part} --max-len {len} --only '{key}'")
        },
    )
}
