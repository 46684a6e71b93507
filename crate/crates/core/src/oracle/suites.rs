//! Named verification suites comparing structural procedures with
//! exhaustive computation.

use std::collections::{HashMap, HashSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{brute_centralizer, brute_class, closure_from_generators, conjugacy_classes, d_generators};
use crate::bits::BitVector;
use crate::braid::monomial::{theta_module, LinearMu};
use crate::braid::{braiding_is_finite, YdSpec};
use crate::chars::BinaryCharacter;
use crate::cycles::{are_conjugate_b, build_conjugator, is_in_d, partitions};
use crate::error::{Error, Result};
use crate::group::{conjugate, FlavorKind, GroupElement, GroupFlavor};
use crate::perm::Permutation;
use crate::sqcomm::{
    classes_square_commute, project, sn_class_rep, sn_square_classification, wreath_square_cases,
};
use crate::verdict::{
    classify, cor_3_6pp_shortcut, decide_abelian_support, decide_reducible, cross_parity_pair,
    necessary_parity, Outcome,
};

pub const SUITES: &[&str] = &[
    "appendix",
    "theorem2.3",
    "alpha-shift",
    "squarecomm",
    "reducible",
    "bn-dn",
];

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: u64,
    pub mismatches: Vec<String>,
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn absorb(&mut self, other: SuiteReport) {
        self.cases += other.cases;
        self.mismatches.extend(other.mismatches);
    }
}

struct Tally {
    start: Instant,
    report: SuiteReport,
}

impl Tally {
    fn new(suite: &str) -> Self {
        Tally {
            start: Instant::now(),
            report: SuiteReport {
                suite: suite.to_string(),
                ..SuiteReport::default()
            },
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.report.cases += 1;
        if !ok {
            self.report.mismatches.push(what());
        }
    }

    /// Records a side condition without counting it as a case.
    fn flag(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.report.mismatches.push(what());
        }
    }

    fn finish(mut self) -> SuiteReport {
        self.report.wall_ms = self.start.elapsed().as_millis();
        self.report
    }
}

/// Runs a suite by name over ranks up to `max_n` (each suite clamps this to
/// the ranks it can handle exhaustively).
pub fn verify_suite(name: &str, max_n: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut report = match name {
        "appendix" => {
            let mut r = check_conjugacy(max_n.min(4))?;
            r.absorb(check_conjugator(max_n.min(4), 100, 0x5eed)?);
            r.absorb(check_d_membership(4)?);
            r
        }
        "theorem2.3" => check_theorem_2_3(max_n.min(5), FlavorKind::B)?,
        "alpha-shift" => check_alpha_shift(3)?,
        "squarecomm" => {
            let mut r = check_sn_square(max_n.min(6))?;
            r.absorb(check_wreath_square(max_n.min(4))?);
            r.absorb(check_projection(4)?);
            r
        }
        "reducible" => check_reducible(max_n.min(4))?,
        "bn-dn" => check_transfer(max_n.clamp(4, 5))?,
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    report.suite = name.to_string();
    report.wall_ms = start.elapsed().as_millis();
    Ok(report)
}

/// Structural `W(B_n)` conjugacy against brute-force orbits, all pairs.
pub fn check_conjugacy(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("conjugacy");
    for n in 1..=max_n {
        let classes = conjugacy_classes(GroupFlavor::b(n))?;
        let class_of: HashMap<GroupElement, usize> = classes
            .iter()
            .enumerate()
            .flat_map(|(i, c)| c.iter().map(move |x| (*x, i)))
            .collect();
        let elements: Vec<GroupElement> = GroupFlavor::b(n).elements()?;
        for x in &elements {
            for y in &elements {
                let same = class_of[x] == class_of[y];
                let structural = are_conjugate_b(x, y)?;
                t.check(same == structural, || format!("B{n}: {x} ~ {y}: brute {same}"));
            }
        }
    }
    Ok(t.finish())
}

/// `conjugate(build_conjugator(x, y), x) = y` on seeded random pairs.
pub fn check_conjugator(max_n: usize, per_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut t = Tally::new("conjugator");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 2..=max_n {
        let elements = GroupFlavor::b(n).elements()?;
        for _ in 0..per_n {
            let x = elements[rng.gen_range(0..elements.len())];
            let g = elements[rng.gen_range(0..elements.len())];
            let y = conjugate(&g, &x)?;
            let c = build_conjugator(&x, &y)?;
            let got = conjugate(&c, &x)?;
            t.check(got == y, || format!("B{n}: conjugator {c} sends {x} to {got}, not {y}"));
        }
    }
    Ok(t.finish())
}

/// Sign-cycle membership test against the subgroup generated by the `D_n`
/// generators.
pub fn check_d_membership(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("d-membership");
    let b = GroupFlavor::b(n);
    let closure: HashSet<GroupElement> = closure_from_generators(b, &d_generators(n))?.into_iter().collect();
    for x in b.elements()? {
        let inside = closure.contains(&x);
        t.check(is_in_d(&x) == inside, || format!("{x}: closure says {inside}"));
    }
    Ok(t.finish())
}

/// Abelian-support decider against build, Cartan matrix and ADE
/// recognition; also Finite implies the parity condition.
pub fn check_theorem_2_3(max_n: usize, kind: FlavorKind) -> Result<SuiteReport> {
    let mut t = Tally::new("theorem2.3");
    for n in 3..=max_n {
        let flavor = GroupFlavor::new(kind, n)?;
        for a in BitVector::all(n).skip(1).filter(|a| flavor.contains_vector(a)) {
            let sigma = GroupElement::from_a(flavor, a)?;
            for b in BitVector::all(n) {
                let chi = BinaryCharacter::new(b);
                let verdict = decide_abelian_support(&sigma, &chi)?;
                let pipeline = braiding_is_finite(&YdSpec::new(sigma, chi)?)?;
                let finite = verdict.outcome == Outcome::Finite;
                t.check(finite == pipeline, || {
                    format!("{flavor} a={a} b={b}: verdict {verdict}, pipeline finite={pipeline}")
                });
                if finite {
                    let parity = necessary_parity(&sigma, &chi)?;
                    t.flag(parity, || format!("{flavor} a={a} b={b}: Finite but parity fails"));
                }
            }
        }
    }
    Ok(t.finish())
}

/// For `χ(α) = 1`, the modules over `(α, τ)` and `(1, τ)` have identical
/// braidings, for every `τ ∈ S_n` and both one-dimensional `μ`.
pub fn check_alpha_shift(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("alpha-shift");
    let b = GroupFlavor::b(n);
    let alpha = BitVector::ones(n);
    for tau in Permutation::all(n) {
        for bits in BitVector::all(n).filter(|x| x.weight() % 2 == 0) {
            let chi = BinaryCharacter::new(bits);
            for mu in [LinearMu::Trivial, LinearMu::Sign] {
                let m = theta_module(&GroupElement::new(b, alpha, tau)?, &chi, mu)?;
                let base = theta_module(&GroupElement::from_perm(b, tau)?, &chi, mu)?;
                let same = m.target == base.target && m.sign == base.sign;
                t.check(same, || format!("tau={tau} chi={chi} mu={mu:?}: braidings differ"));
            }
        }
    }
    Ok(t.finish())
}

/// The `S_n` classification against brute force, all nontrivial class
/// pairs, `3 <= n <= max_n`.
pub fn check_sn_square(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("sn-square");
    for n in 3..=max_n {
        let s = GroupFlavor::s(n);
        let types: Vec<Vec<usize>> = partitions(n).into_iter().filter(|p| p[0] > 1).collect();
        for (i, x) in types.iter().enumerate() {
            for y in &types[i..] {
                let ex = GroupElement::from_perm(s, sn_class_rep(x))?;
                let ey = GroupElement::from_perm(s, sn_class_rep(y))?;
                let brute = classes_square_commute(&ex, &ey)?.holds;
                let claimed = sn_square_classification(x, y, n)?;
                t.check(brute == claimed, || {
                    format!("S{n} {x:?} vs {y:?}: classification {claimed}, brute {brute}")
                });
            }
        }
    }
    Ok(t.finish())
}

/// Closed-form wreath cases against brute force on `W(B_n)`, `n ∈ {3, 4}`.
pub fn check_wreath_square(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("wreath-square");
    for n in 3..=max_n {
        let reps: Vec<GroupElement> = conjugacy_classes(GroupFlavor::b(n))?
            .into_iter()
            .map(|c| c[0])
            .collect();
        for (i, x) in reps.iter().enumerate() {
            for y in &reps[i..] {
                if let Some(claimed) = wreath_square_cases(x, y)? {
                    let brute = classes_square_commute(x, y)?.holds;
                    t.check(brute == claimed, || {
                        format!("B{n} {x} vs {y}: closed form {claimed}, brute {brute}")
                    });
                }
            }
        }
    }
    Ok(t.finish())
}

/// Square-commutativity in `W(B_n)` passes to the `S_n` projections.
pub fn check_projection(n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("projection");
    let reps: Vec<GroupElement> = conjugacy_classes(GroupFlavor::b(n))?
        .into_iter()
        .map(|c| c[0])
        .collect();
    for (i, x) in reps.iter().enumerate() {
        for y in &reps[i..] {
            if classes_square_commute(x, y)?.holds {
                let projected = classes_square_commute(&project(x), &project(y))?.holds;
                t.check(projected, || format!("B{n} {x} vs {y}: projections fail"));
            } else {
                t.check(true, String::new);
            }
        }
    }
    Ok(t.finish())
}

/// Singleton reducible verdicts against the irreducible deciders, and
/// structural cross-parity shortcuts against the brute scan, `W(B_n)`.
pub fn check_reducible(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("reducible");
    for n in 3..=max_n {
        let b = GroupFlavor::b(n);
        let mut finite = Vec::new();
        for a in BitVector::all(n).skip(1) {
            let sigma = GroupElement::from_a(b, a)?;
            for bits in BitVector::all(n) {
                let spec = YdSpec::new(sigma, BinaryCharacter::new(bits))?;
                let single = decide_reducible(std::slice::from_ref(&spec))?;
                let direct = decide_abelian_support(&sigma, &spec.chi)?;
                t.check(single == direct && classify(&spec)? == direct, || {
                    format!("B{n} a={a} b={bits}: singleton {single}, direct {direct}")
                });
                if direct.outcome == Outcome::Finite {
                    finite.push(spec);
                }
            }
        }
        for u in &finite {
            for v in &finite {
                if let Some(clause) = cor_3_6pp_shortcut(u, v)? {
                    let brute = cross_parity_pair(u, v)? && cross_parity_pair(v, u)?;
                    t.check(brute, || {
                        format!(
                            "B{n} ({}, {}) vs ({}, {}): clause {clause} but cross-parity fails",
                            u.sigma, u.chi, v.sigma, v.chi
                        )
                    });
                }
            }
        }
    }
    Ok(t.finish())
}

/// Transfer case assignment against brute-force class and centralizer
/// comparison between `W(B_n)` and `W(D_n)`, every element of `W(D_n)`.
pub fn check_transfer(max_n: usize) -> Result<SuiteReport> {
    let mut t = Tally::new("bn-dn");
    for n in 4..=max_n {
        let (bf, df) = (GroupFlavor::b(n), GroupFlavor::d(n));
        for x in df.elements()? {
            let xb = x.with_flavor(bf)?;
            let class_b = brute_class(&xb)?;
            let class_d = brute_class(&x)?;
            let classes_equal = class_b.len() == class_d.len();
            let cent_b = brute_centralizer(&xb)?;
            let cent_d = brute_centralizer(&x)?;
            let cents_equal = cent_b.len() == cent_d.len();
            let claimed = crate::verdict::bn_dn_transfer(&x)?;
            let ok = match claimed {
                crate::verdict::Transfer::ClassesEqual => classes_equal && !cents_equal,
                crate::verdict::Transfer::CentralizersEqual => cents_equal && !classes_equal,
            };
            t.check(ok, || {
                format!("D{n} {x}: {claimed}, brute classes_equal={classes_equal} cents_equal={cents_equal}")
            });
        }
    }
    Ok(t.finish())
}
