//! Finiteness decisions for Nichols algebras over `A ⋊ S_n`, each returning
//! a three-valued [`Verdict`] that names the rule it came from.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::bits::BitVector;
use crate::braid::YdSpec;
use crate::chars::{stabilizer_chi_in, stabilizer_is_full, BinaryCharacter};
use crate::cycles::{decompose, is_in_d};
use crate::error::{Error, Result};
use crate::group::{check_cap, factorial, perm_stabilizer, GroupElement, GroupFlavor};
use crate::perm::Permutation;
use crate::sqcomm::classes_square_commute;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Outcome {
    Finite,
    Infinite,
    Undetermined,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Finite => "Finite",
            Outcome::Infinite => "Infinite",
            Outcome::Undetermined => "Undetermined",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Table1Case1,
    Theorem2_3,
    Theorem2_4,
    Theorem2_5,
    Proposition2_6,
    Proposition2_9,
    Theorem3Prime,
    Theorem3_3,
    Theorem3_4,
    Theorem3_6,
    Corollary3_6pp,
    Proposition3_6ppp,
    Theorem3_8,
    Remark3_12p,
    Theorem4Prime,
    Table1,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Table1Case1 => "Table 1 case 1 (AZ07)",
            Rule::Theorem2_3 => "Theorem 2.3",
            Rule::Theorem2_4 => "Theorem 2.4",
            Rule::Theorem2_5 => "Theorem 2.5",
            Rule::Proposition2_6 => "Proposition 2.6",
            Rule::Proposition2_9 => "Proposition 2.9",
            Rule::Theorem3Prime => "Theorem 3' / Remark 3.8'",
            Rule::Theorem3_3 => "Theorem 3.3",
            Rule::Theorem3_4 => "Theorem 3.4",
            Rule::Theorem3_6 => "Theorem 3.6",
            Rule::Corollary3_6pp => "Corollary 3.6''",
            Rule::Proposition3_6ppp => "Proposition 3.6'''",
            Rule::Theorem3_8 => "Theorem 3.8",
            Rule::Remark3_12p => "Remark 3.12'",
            Rule::Theorem4Prime => "Theorem 4' (HS08)",
            Rule::Table1 => "Table 1",
        })
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub rule: Rule,
    pub detail: String,
}

impl Verdict {
    pub fn new(outcome: Outcome, rule: Rule, detail: impl Into<String>) -> Self {
        Verdict {
            outcome,
            rule,
            detail: detail.into(),
        }
    }

    fn finite(rule: Rule, detail: impl Into<String>) -> Self {
        Verdict::new(Outcome::Finite, rule, detail)
    }

    fn infinite(rule: Rule, detail: impl Into<String>) -> Self {
        Verdict::new(Outcome::Infinite, rule, detail)
    }

    fn undetermined(rule: Rule, detail: impl Into<String>) -> Self {
        Verdict::new(Outcome::Undetermined, rule, detail)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}: {})", self.outcome, self.rule, self.detail)
    }
}

/// One summand `M(O_σ, θ_{χ,μ})` of a Yetter–Drinfeld module.
pub type Summand = YdSpec;

/// Parses `"<elem>|<chi bits>|<deg_mu>|<mu_label>"`; the last two fields
/// may be omitted.
pub fn parse_summand(s: &str, flavor: GroupFlavor) -> Result<Summand> {
    let parts: Vec<&str> = s.splitn(4, '|').collect();
    if parts.len() < 2 {
        return Err(Error::parse(s, 0, "expected <elem>|<chi>[|<deg_mu>[|<mu_label>]]"));
    }
    let sigma = GroupElement::parse(parts[0].trim(), flavor)?;
    let chi = BinaryCharacter::parse(parts[1].trim(), flavor.n())?;
    let deg_mu = match parts.get(2).map(|d| d.trim()) {
        None | Some("") => 1,
        Some(d) => match d.parse::<u32>() {
            Ok(v) if v > 0 => v,
            _ => {
                let pos = parts[0].len() + parts[1].len() + 2;
                return Err(Error::parse(s, pos, "deg_mu must be a positive integer"));
            }
        },
    };
    let label = parts
        .get(3)
        .map(|l| l.trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string);
    Ok(YdSpec::new(sigma, chi)?.with_mu(deg_mu, label))
}

fn alpha(n: usize) -> BitVector {
    BitVector::ones(n)
}

fn is_alpha(x: &GroupElement) -> bool {
    x.in_a() && x.a().is_ones()
}

fn is_central(x: &GroupElement) -> bool {
    x.is_identity() || (is_alpha(x) && x.n() >= 3)
}

fn require_in_a(sigma: &GroupElement) -> Result<BitVector> {
    if !sigma.in_a() {
        return Err(Error::Domain(format!("{sigma} is not in A")));
    }
    Ok(sigma.a())
}

/// `σ ∈ A`, any `χ`: finite iff `f_σ` is odd and `W_χ = W_σ`, `|W_σ| = n`
/// or `|W_χ| = n`.
pub fn decide_abelian_support(sigma: &GroupElement, chi: &BinaryCharacter) -> Result<Verdict> {
    let a = require_in_a(sigma)?;
    if chi.n() != sigma.n() {
        return Err(Error::Dimension {
            expected: sigma.n(),
            found: chi.n(),
        });
    }
    if a.is_zero() {
        return Ok(Verdict::infinite(Rule::Table1Case1, "sigma = e"));
    }
    let n = sigma.n();
    if n <= 2 {
        return Ok(Verdict::undetermined(Rule::Theorem2_3, format!("needs n > 2, got n = {n}")));
    }
    let w = chi.support();
    let f = a.and(&w)?.weight();
    if f % 2 == 0 {
        return Ok(Verdict::infinite(Rule::Theorem2_3, format!("f = {f} even")));
    }
    let clause = if w == a {
        Some("W_chi = W_sigma")
    } else if a.weight() as usize == n {
        Some("|W_sigma| = n")
    } else if w.weight() as usize == n {
        Some("|W_chi| = n")
    } else {
        None
    };
    Ok(match clause {
        Some(c) => Verdict::finite(Rule::Theorem2_3, format!("{c}, f odd")),
        None => Verdict::infinite(
            Rule::Theorem2_3,
            format!("f = {f} odd but W_chi != W_sigma, |W_sigma| < n, |W_chi| < n"),
        ),
    })
}

fn image_meet_parity(g: &Permutation, w: &BitVector, chi: &BitVector) -> u32 {
    w.permuted(g).expect("rank").and(chi).expect("rank").weight() % 2
}

/// `|g(W_σ) ∩ W_χ| ≡ |g^{-1}(W_σ) ∩ W_χ| (mod 2)` for every `g ∈ S_n`.
pub fn necessary_parity(sigma: &GroupElement, chi: &BinaryCharacter) -> Result<bool> {
    let a = require_in_a(sigma)?;
    let n = sigma.n();
    check_cap(factorial(n))?;
    let w = chi.support();
    Ok(Permutation::all(n)
        .all(|g| image_meet_parity(&g, &a, &w) == image_meet_parity(&g.inverse(), &a, &w)))
}

/// Parsed `muJ=LABEL` assignments, keyed by `J`, values normalized.
pub type MuLabels = BTreeMap<usize, String>;

fn normalize_label(s: &str) -> String {
    let mut t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    for (from, to) in [
        ("\\otimes", "*"),
        ("⊗", "*"),
        ("\\epsilon", "eps"),
        ("epsilon", "eps"),
        ("ε", "eps"),
        ("\\chi", "chi"),
        ("χ", "chi"),
        ("{\\rmsgn}", "sgn"),
        ("\\rmsgn", "sgn"),
    ] {
        t = t.replace(from, to);
    }
    t.retain(|c| !matches!(c, '_' | '{' | '}' | '\\'));
    t
}

/// Parses labels such as `mu1=sgn mu2=chi(1;2)`. Separators between
/// assignments are optional.
pub fn parse_mu_labels(s: &str) -> Result<MuLabels> {
    let bytes = s.as_bytes();
    let mut starts = Vec::new();
    let mut i = 0;
    while i + 2 < bytes.len() {
        if &bytes[i..i + 2] == b"mu" {
            let mut j = i + 2;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if j > i + 2 && j < bytes.len() && bytes[j] == b'=' {
                let key: usize = s[i + 2..j]
                    .parse()
                    .map_err(|_| Error::parse(s, i + 2, "bad mu index"))?;
                starts.push((i, key, j + 1));
                i = j + 1;
                continue;
            }
        }
        i += 1;
    }
    if starts.is_empty() {
        return if s.trim().is_empty() {
            Ok(MuLabels::new())
        } else {
            Err(Error::parse(s, 0, "expected muJ=LABEL"))
        };
    }
    if !s[..starts[0].0].trim().is_empty() {
        return Err(Error::parse(s, 0, "text before first muJ="));
    }
    let mut out = MuLabels::new();
    for (k, &(_, key, from)) in starts.iter().enumerate() {
        let to = starts.get(k + 1).map(|x| x.0).unwrap_or(s.len());
        let raw = s[from..to].trim().trim_end_matches([',', ';']).trim();
        if raw.is_empty() {
            return Err(Error::parse(s, from, format!("empty label for mu{key}")));
        }
        out.insert(key, normalize_label(raw));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Exceptional {
    Transposition,
    TwoThree,
    TwoCubed,
    Four,
}

impl Exceptional {
    fn of(lambda: &[usize], n: usize) -> Option<Self> {
        match lambda {
            [2, rest @ ..] if rest.iter().all(|&l| l == 1) => Some(Exceptional::Transposition),
            [3, 2] if n == 5 => Some(Exceptional::TwoThree),
            [2, 2, 2] if n == 6 => Some(Exceptional::TwoCubed),
            [4] if n == 4 => Some(Exceptional::Four),
            _ => None,
        }
    }

    fn case(self) -> &'static str {
        match self {
            Exceptional::Transposition => "(i)",
            Exceptional::TwoThree => "(ii)",
            Exceptional::TwoCubed => "(iii)",
            Exceptional::Four => "(iv)",
        }
    }

    fn table_row(self) -> Option<u8> {
        match self {
            Exceptional::Transposition => None,
            Exceptional::TwoCubed => Some(4),
            Exceptional::TwoThree => Some(5),
            Exceptional::Four => Some(6),
        }
    }

    /// Required `(J, allowed labels)` pairs, with alternate keys for `J`.
    fn requirements(self) -> Vec<(&'static [usize], &'static [&'static str])> {
        match self {
            Exceptional::Transposition => vec![(&[1], &["sgn", "eps"]), (&[2], &["chi(1;2)"])],
            Exceptional::TwoThree => vec![(&[2], &["chi(1;2)"]), (&[3], &["chi(0;3)"])],
            Exceptional::TwoCubed => {
                vec![(&[2], &["chi(1,1,1;2)*eps", "chi(1,1,1;2)*sgn"])]
            }
            Exceptional::Four => vec![(&[1, 4], &["chi(1;4)", "chi(3;4)"])],
        }
    }
}

fn validate_lambda(lambda: &[usize], n: usize) -> Result<Vec<usize>> {
    if lambda.contains(&0) || lambda.iter().sum::<usize>() != n {
        return Err(Error::Domain(format!("{lambda:?} is not a cycle type of rank {n}")));
    }
    let mut l = lambda.to_vec();
    l.sort_unstable_by(|a, b| b.cmp(a));
    Ok(l)
}

/// `σ ∈ S_n` with cycle type `lambda` (fixed points included).
/// `blocks_ok` says whether every `Y_j` lies in `W_χ` or misses it.
pub fn decide_sn_support(
    lambda: &[usize],
    n: usize,
    mu_label: Option<&str>,
    deg_mu: u32,
    blocks_ok: bool,
) -> Result<Verdict> {
    let lambda = validate_lambda(lambda, n)?;
    if lambda.iter().all(|&l| l == 1) {
        return Ok(Verdict::infinite(Rule::Table1Case1, "sigma = e"));
    }
    if n <= 2 {
        return Ok(Verdict::undetermined(Rule::Theorem2_5, format!("needs n > 2, got n = {n}")));
    }
    let even = lambda.iter().filter(|&&l| l % 2 == 0).count() % 2 == 0;
    if even && n >= 5 && n != 6 {
        return Ok(Verdict::infinite(Rule::Theorem2_4, "sigma in A_n, n >= 5, n != 6 (Table 1 case 2)"));
    }
    let Some(exc) = Exceptional::of(&lambda, n) else {
        let case = if matches!(n, 4..=6) { 7 } else { 3 };
        return Ok(Verdict::infinite(
            Rule::Theorem2_5,
            format!("type {} is not exceptional (Table 1 case {case})", type_string(&lambda)),
        ));
    };
    if deg_mu > 1 {
        return Ok(Verdict::infinite(
            Rule::Theorem2_5,
            format!("rho must be one-dimensional, deg mu = {deg_mu}"),
        ));
    }
    if !blocks_ok {
        return Ok(Verdict::infinite(
            Rule::Theorem2_5,
            "some Y_j meets W_chi without lying inside it",
        ));
    }
    let labels = match mu_label {
        Some(s) => parse_mu_labels(s)?,
        None => MuLabels::new(),
    };
    let mut missing = Vec::new();
    for (keys, allowed) in exc.requirements() {
        let given = keys.iter().find_map(|k| labels.get(k));
        match given {
            None => missing.push(format!("mu{}", keys[0])),
            Some(v) if !allowed.contains(&v.as_str()) => {
                let row = exc
                    .table_row()
                    .map(|r| format!(" (Table 1 case {r})"))
                    .unwrap_or_default();
                return Ok(Verdict::infinite(
                    Rule::Theorem2_5,
                    format!(
                        "case {} needs mu{} in {{{}}}, got {v}{row}",
                        exc.case(),
                        keys[0],
                        allowed.join(", ")
                    ),
                ));
            }
            Some(_) => {}
        }
    }
    if !missing.is_empty() {
        return Ok(Verdict::undetermined(
            Rule::Theorem2_5,
            format!("case {}, labels not given: {}", exc.case(), missing.join(", ")),
        ));
    }
    Ok(Verdict::undetermined(
        Rule::Theorem2_5,
        format!("case {} with matching labels; necessary condition only", exc.case()),
    ))
}

fn type_string(lambda: &[usize]) -> String {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &l in lambda {
        *counts.entry(l).or_default() += 1;
    }
    counts
        .iter()
        .map(|(l, m)| format!("{l}^{m}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// `σ = (α, τ)` from the verdict `base` for `(1, τ)` with the same `ρ`.
pub fn decide_alpha_shift(tau: &Permutation, chi: &BinaryCharacter, base: &Verdict) -> Verdict {
    let chi_alpha = if chi.bits().weight() % 2 == 0 { 1 } else { -1 };
    let tail = format!("(1,{tau}) is {}: {}", base.outcome, base.rule);
    if chi_alpha == 1 {
        return Verdict::new(base.outcome, Rule::Proposition2_6, format!("chi(alpha) = 1, {tail}"));
    }
    match base.outcome {
        Outcome::Finite => {
            Verdict::infinite(Rule::Proposition2_6, format!("chi(alpha) = -1, {tail}"))
        }
        _ => Verdict::undetermined(Rule::Proposition2_6, format!("chi(alpha) = -1, {tail}")),
    }
}

/// Every sign cycle positive and `τ` of type `2²` at `n = 4`.
fn prop_2_9_applies(sigma: &GroupElement) -> bool {
    sigma.n() == 4
        && sigma.perm().cycle_type() == [2, 2]
        && decompose(sigma).iter().all(|c| !c.negative)
}

/// `σ = (a, (1 2)(3 4))` at `n = 4`.
pub fn decide_22_negative(a: &BitVector) -> Result<Verdict> {
    if a.len() != 4 {
        return Err(Error::Domain(format!("needs n = 4, got {}", a.len())));
    }
    let tau = Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?;
    let sigma = GroupElement::new(GroupFlavor::b(4), *a, tau)?;
    Ok(if prop_2_9_applies(&sigma) {
        Verdict::infinite(Rule::Proposition2_9, "a1+a2 = a3+a4 = 0 mod 2 (Table 1 case 9)")
    } else {
        Verdict::undetermined(Rule::Proposition2_9, "block parities not both even")
    })
}

/// Irreducible front door.
pub fn classify(spec: &Summand) -> Result<Verdict> {
    let sigma = &spec.sigma;
    let n = sigma.n();
    if spec.chi.n() != n {
        return Err(Error::Dimension {
            expected: n,
            found: spec.chi.n(),
        });
    }
    if sigma.is_identity() {
        return Ok(Verdict::infinite(Rule::Table1Case1, "sigma = e"));
    }
    if sigma.in_a() {
        return decide_abelian_support(sigma, &spec.chi);
    }
    let tau = sigma.perm();
    if sigma.in_sn() {
        let blocks_ok = stabilizer_is_full(&tau, &spec.chi.support());
        return decide_sn_support(
            &tau.cycle_type(),
            n,
            spec.mu_label.as_deref(),
            spec.deg_mu,
            blocks_ok,
        );
    }
    if n <= 2 {
        return Ok(Verdict::undetermined(Rule::Table1, format!("needs n > 2, got n = {n}")));
    }
    if prop_2_9_applies(sigma) {
        return Ok(Verdict::infinite(
            Rule::Proposition2_9,
            "type 2^2, every sign cycle positive (Table 1 case 9)",
        ));
    }
    if sigma.a() == alpha(n) {
        let base_sigma = GroupElement::from_perm(sigma.flavor(), tau)?;
        let base_spec = YdSpec::new(base_sigma, spec.chi)?.with_mu(spec.deg_mu, spec.mu_label.clone());
        let base = classify(&base_spec)?;
        return Ok(decide_alpha_shift(&tau, &spec.chi, &base));
    }
    Ok(Verdict::undetermined(
        Rule::Table1,
        "sigma = (a, tau) outside the cases covered",
    ))
}

/// All `σ_i = α`: finite iff every `χ^{(i)}(α) = −1`.
pub fn central_qls_test(summands: &[Summand]) -> Result<Verdict> {
    if summands.is_empty() {
        return Err(Error::Domain("empty summand list".into()));
    }
    check_flavors(summands)?;
    if let Some(s) = summands.iter().find(|s| !is_alpha(&s.sigma)) {
        return Err(Error::Domain(format!("{} is not alpha", s.sigma)));
    }
    Ok(match summands.iter().position(|s| s.chi.bits().weight() % 2 == 0) {
        None => Verdict::finite(Rule::Theorem3Prime, "every chi(alpha) = -1"),
        Some(i) => Verdict::infinite(
            Rule::Theorem3Prime,
            format!("summand {} has chi(alpha) = 1", i + 1),
        ),
    })
}

fn check_flavors(summands: &[Summand]) -> Result<()> {
    let f = summands[0].flavor();
    for s in &summands[1..] {
        f.check_same(&s.flavor())?;
    }
    for s in summands {
        if s.chi.n() != f.n() {
            return Err(Error::Dimension {
                expected: f.n(),
                found: s.chi.n(),
            });
        }
    }
    Ok(())
}

/// `|g(W_{σ_i}) ∩ W_{χ_j}| ≡ |g^{-1}(W_{σ_j}) ∩ W_{χ_i}| (mod 2)` for
/// every `g ∈ S_n`, for one ordered pair.
pub fn cross_parity_pair(si: &Summand, sj: &Summand) -> Result<bool> {
    let (wi, wj) = (require_in_a(&si.sigma)?, require_in_a(&sj.sigma)?);
    let n = si.sigma.n();
    check_cap(factorial(n))?;
    let (ci, cj) = (si.chi.support(), sj.chi.support());
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    Ok(perms.par_iter().all(|g| {
        image_meet_parity(g, &wi, &cj) == image_meet_parity(&g.inverse(), &wj, &ci)
    }))
}

/// cross-parity over every ordered pair, the diagonal included.
pub fn cross_parity_all(summands: &[Summand]) -> Result<bool> {
    for si in summands {
        for sj in summands {
            if !cross_parity_pair(si, sj)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which structural shortcut for the cross-parity condition covers the pair, if any.
/// Both summands must have support in `A`.
pub fn cor_3_6pp_shortcut(u: &Summand, v: &Summand) -> Result<Option<&'static str>> {
    let (wu, wv) = (require_in_a(&u.sigma)?, require_in_a(&v.sigma)?);
    let n = u.sigma.n() as u32;
    let (cu, cv) = (u.chi.support().weight(), v.chi.support().weight());
    Ok(if !is_central(&u.sigma) && !is_central(&v.sigma) && cu < n && cv < n {
        Some("(i)")
    } else if cu == n && cv == n {
        Some("(ii)")
    } else if wu.weight() == n && wv.weight() == n {
        Some("(iii)")
    } else if (cu == n && wu.weight() == n) || (cv == n && wv.weight() == n) {
        Some("(iv)")
    } else {
        None
    })
}

/// `deg ρ = [S_n^σ : (S_n^σ)_χ] · deg μ` for `σ ∈ A`.
pub fn rho_degree(s: &Summand) -> Result<u64> {
    let a = require_in_a(&s.sigma)?;
    let stab = perm_stabilizer(s.sigma.n(), |p| a.permuted(p).expect("rank") == a)?;
    let fixed = stabilizer_chi_in(s.flavor(), &stab, &s.chi);
    Ok((stab.len() / fixed.len()) as u64 * s.deg_mu as u64)
}

/// Reducible front door.
pub fn decide_reducible(summands: &[Summand]) -> Result<Verdict> {
    if summands.is_empty() {
        return Err(Error::Domain("empty summand list".into()));
    }
    check_flavors(summands)?;
    if summands.len() == 1 {
        return classify(&summands[0]);
    }
    let n = summands[0].sigma.n();
    if let Some(i) = summands.iter().position(|s| s.sigma.is_identity()) {
        return Ok(Verdict::infinite(Rule::Table1Case1, format!("summand {} has sigma = e", i + 1)));
    }
    if summands.iter().all(|s| is_alpha(&s.sigma)) {
        return central_qls_test(summands);
    }
    if n <= 2 {
        return Ok(Verdict::undetermined(Rule::Table1, format!("needs n > 2, got n = {n}")));
    }
    if summands.iter().all(|s| s.sigma.in_sn()) {
        return Ok(Verdict::infinite(Rule::Theorem3_3, "(i) reducible, supported by S_n, n >= 3"));
    }
    for (i, s) in summands.iter().enumerate() {
        let v = classify(s)?;
        if v.outcome == Outcome::Infinite {
            return Ok(Verdict::infinite(v.rule, format!("summand {}: {}", i + 1, v.detail)));
        }
    }
    if summands.iter().all(|s| s.sigma.in_a()) {
        return decide_abelian_reducible(summands);
    }
    decide_mixed(summands)
}

fn decide_abelian_reducible(summands: &[Summand]) -> Result<Verdict> {
    let flavor = summands[0].flavor();
    let first = &summands[0];
    if summands
        .iter()
        .all(|s| s.sigma == first.sigma && s.chi.same_on(&first.chi, flavor))
    {
        return Ok(Verdict::finite(Rule::Theorem3_4, "common sigma and chi, each summand finite"));
    }
    let mut clauses = Vec::new();
    'pairs: for (i, u) in summands.iter().enumerate() {
        for v in &summands[i + 1..] {
            match cor_3_6pp_shortcut(u, v)? {
                Some(c) => clauses.push(c),
                None => {
                    clauses.clear();
                    break 'pairs;
                }
            }
        }
    }
    if !clauses.is_empty() {
        clauses.sort_unstable();
        clauses.dedup();
        return Ok(Verdict::finite(
            Rule::Corollary3_6pp,
            format!("every pair meets {}", clauses.join(" or ")),
        ));
    }
    if cross_parity_all(summands)? {
        return Ok(Verdict::finite(Rule::Theorem3_6, "cross-parity holds for all g and all pairs"));
    }
    if let [s1, s2] = summands {
        let (a, b) = if is_alpha(&s1.sigma) { (s1, s2) } else { (s2, s1) };
        if is_alpha(&a.sigma) && !is_alpha(&b.sigma) {
            let deg_rho2 = rho_degree(b)?;
            let deg_mu1 = a.deg_mu as u64;
            let clause = if deg_rho2 > 3 {
                Some("(i)")
            } else if deg_mu1 > 3 {
                Some("(ii)")
            } else if deg_rho2 >= 2 && deg_mu1 >= 2 {
                Some("(iii)")
            } else {
                None
            };
            if let Some(c) = clause {
                return Ok(Verdict::infinite(
                    Rule::Proposition3_6ppp,
                    format!("{c}: cross-parity fails, deg rho2 = {deg_rho2}, deg mu1 = {deg_mu1}"),
                ));
            }
        }
    }
    Ok(Verdict::undetermined(
        Rule::Theorem3_6,
        "cross-parity fails for some g; no rule applies",
    ))
}

fn decide_mixed(summands: &[Summand]) -> Result<Verdict> {
    let n = summands[0].sigma.n();
    let m = summands.len();
    let m1 = summands.iter().filter(|s| is_alpha(&s.sigma)).count();
    let m2 = summands.iter().filter(|s| s.sigma.in_a()).count();
    let outside: Vec<&Summand> = summands.iter().filter(|s| !s.sigma.in_a()).collect();
    let m3 = outside.len();

    if m3 >= 2 {
        let shape_ok = n == 4
            && outside.iter().all(|s| s.sigma.perm().cycle_type() == [2, 2])
            && outside
                .iter()
                .all(|s| s.sigma.a().parity() == outside[0].sigma.a().parity());
        if !shape_ok {
            if let Some(v) = non_square_commuting(summands)? {
                return Ok(Verdict::infinite(Rule::Remark3_12p, v));
            }
            // A transposition class can square-commute with a 2^2 class at
            // n = 4 (and with a 2^k class at n = 2k), so the shape
            // condition alone does not force Infinite here.
            return Ok(Verdict::undetermined(
                Rule::Remark3_12p,
                "shape fails but every pair of classes is square-commutative",
            ));
        }
    } else {
        let tau_ok = outside[0].sigma.perm().pow(2).is_identity();
        if !(m1 + 1 >= m || (m2 + 1 == m && tau_ok)) {
            return Ok(Verdict::infinite(
                Rule::Theorem3_8,
                format!("m1 = {m1} < m - 1 and tau^2 != 1"),
            ));
        }
    }

    if let Some(v) = non_square_commuting(summands)? {
        return Ok(Verdict::infinite(Rule::Theorem4Prime, v));
    }
    Ok(Verdict::undetermined(
        Rule::Theorem3_8,
        "necessary conditions hold",
    ))
}

/// First pair of summands, not both in `A`, whose classes fail to
/// square-commute, described with a witness.
fn non_square_commuting(summands: &[Summand]) -> Result<Option<String>> {
    for (i, u) in summands.iter().enumerate() {
        for (j, v) in summands.iter().enumerate().skip(i + 1) {
            if u.sigma.in_a() && v.sigma.in_a() {
                continue;
            }
            if let Some((s, t)) = classes_square_commute(&u.sigma, &v.sigma)?.witness {
                return Ok(Some(format!(
                    "classes of summands {} and {} not square-commutative: {s}, {t}",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Transfer {
    ClassesEqual,
    CentralizersEqual,
}

impl fmt::Display for Transfer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Transfer::ClassesEqual => "ClassesEqual",
            Transfer::CentralizersEqual => "CentralizersEqual",
        })
    }
}

/// For `σ ∈ W(D_n)`: the `W(B_n)` and `W(D_n)` classes coincide when some
/// sign cycle is negative or some cycle has odd length; otherwise the
/// centralizers coincide.
pub fn bn_dn_transfer(sigma: &GroupElement) -> Result<Transfer> {
    if sigma.flavor().kind() == crate::group::FlavorKind::S || !is_in_d(sigma) {
        return Err(Error::NotInGroup {
            element: sigma.literal(),
            flavor: format!("W(D_{})", sigma.n()),
        });
    }
    if sigma.n() < 4 {
        return Err(Error::Domain(format!("transfer needs n >= 4, got {}", sigma.n())));
    }
    Ok(
        if decompose(sigma).iter().any(|c| c.negative || c.len() % 2 == 1) {
            Transfer::ClassesEqual
        } else {
            Transfer::CentralizersEqual
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub case: u8,
    pub sigma: &'static str,
    pub representation: &'static str,
    pub outcome: Outcome,
    pub reference: &'static str,
}

/// Irreducible modules over `A ⋊ S_n`, `n > 2`, with infinite-dimensional
/// Nichols algebras.
pub fn table1() -> Vec<Table1Row> {
    let row = |case, sigma, representation, reference| Table1Row {
        case,
        sigma,
        representation,
        outcome: Outcome::Infinite,
        reference,
    };
    vec![
        row(1, "σ = e, the unity of G", "any", "AZ07"),
        row(2, "σ ∈ A_n, n ≥ 5, n ≠ 6", "any", "Th. 2.4"),
        row(3, "σ ∈ S_n, n ≥ 3, n ≠ 4, 5, 6, σ is not a transposition", "any", "Th. 2.5"),
        row(
            4,
            "the type of σ is 2^3, σ ∈ S_6, n = 6",
            "μ2 ≠ χ(1,1,1;2)⊗ε, μ2 ≠ χ(1,1,1;2)⊗sgn",
            "Th. 2.5",
        ),
        row(5, "the type of σ is 2^1 3^1, σ ∈ S_5, n = 5", "μ2 ≠ χ(1;2), μ3 ≠ χ(0;3)", "Th. 2.5"),
        row(6, "the type of σ is 4^1, σ ∈ S_4, n = 4", "μ1 ≠ χ(1;4), χ(3;4)", "Th. 2.5"),
        row(7, "the type of σ is not 2^3, 2^1 3^1, 4^1, 1^λ1 2^1", "any", "Th. 2.5"),
        row(
            8,
            "σ = (α, τ), α = (g2, g2, …, g2), τ ∈ S_n, τ satisfies the case 1–7",
            "χ(α) = 1, μ satisfies the case 1–7",
            "Pro. 2.6",
        ),
        row(
            9,
            "σ = (a, τ), the type of τ is 2^2, a = (g2^a1, g2^a2, g2^a3, g2^a4), a1+a2 ≡ a3+a4 ≡ 0 (mod 2)",
            "any",
            "Pro. 2.9",
        ),
    ]
}

/// One `|`-separated line per row.
pub fn table1_text() -> String {
    let mut out = String::from("case | σ | representation | verdict | reference\n");
    for r in table1() {
        out.push_str(&format!(
            "{} | {} | {} | {} | {}\n",
            r.case, r.sigma, r.representation, r.outcome, r.reference
        ));
    }
    out
}
