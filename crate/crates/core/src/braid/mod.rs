//! Diagonal braidings of `M(O_σ, ρ)` for `σ ∈ A`.
//!
//! With `ρ = θ_{χ,μ}` induced from `(χ⊗μ)` on `A ⋊ (S_n^σ)_χ`, the module is
//! induced from that subgroup to `G` and has a basis `h_i ⊗ v` indexed by
//! coset representatives `h_i ∈ S_n` of `(S_n^σ)_χ`. The braiding is
//! diagonal with `q_ij = χ(h_j^{-1} h_i · a)`. Each `h_i` is determined by
//! the pair `(h_i·a, h_i·χ)`, so the basis is the `S_n`-orbit of that pair.
//! The coefficients do not depend on `μ`, whose degree is carried as a line
//! multiplicity.

pub mod monomial;

use serde::Serialize;

use crate::bits::BitVector;
use crate::chars::{f_value, BinaryCharacter};
use crate::dynkin::CartanGraph;
use crate::error::{Error, Result};
use crate::group::{check_cap, factorial, GroupElement, GroupFlavor};
use crate::perm::Permutation;

/// Data of `M(O_σ, θ_{χ,μ})`. `μ` appears only through its degree and an
/// optional opaque label.
#[derive(Clone, Debug)]
pub struct YdSpec {
    pub sigma: GroupElement,
    pub chi: BinaryCharacter,
    pub deg_mu: u32,
    pub mu_label: Option<String>,
}

impl YdSpec {
    pub fn new(sigma: GroupElement, chi: BinaryCharacter) -> Result<Self> {
        if chi.n() != sigma.n() {
            return Err(Error::Dimension {
                expected: sigma.n(),
                found: chi.n(),
            });
        }
        Ok(YdSpec {
            sigma,
            chi,
            deg_mu: 1,
            mu_label: None,
        })
    }

    pub fn with_mu(mut self, deg_mu: u32, label: Option<String>) -> Self {
        self.deg_mu = deg_mu;
        self.mu_label = label;
        self
    }

    pub fn flavor(&self) -> GroupFlavor {
        self.sigma.flavor()
    }
}

/// One basis line `h ⊗ v`: its representative, degree `h·a` and the
/// translated character `h·χ` (canonical on the flavor's `A`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasisLine {
    #[serde(serialize_with = "ser_display")]
    pub h: Permutation,
    #[serde(serialize_with = "ser_display")]
    pub degree: BitVector,
    #[serde(serialize_with = "ser_display")]
    pub chi: BinaryCharacter,
}

fn ser_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalBraiding {
    pub basis: Vec<BasisLine>,
    /// `q[i][j]`, with `c(x_i ⊗ x_j) = q_ij x_j ⊗ x_i`.
    pub q: Vec<Vec<i8>>,
    /// Degree of `μ`: each line stands for this many basis vectors with
    /// identical coefficients.
    pub multiplicity: u32,
}

impl DiagonalBraiding {
    pub fn len(&self) -> usize {
        self.q.len()
    }

    pub fn is_empty(&self) -> bool {
        self.q.is_empty()
    }

    /// Replicates every line `multiplicity` times.
    pub fn expanded(&self) -> DiagonalBraiding {
        let m = self.multiplicity.max(1) as usize;
        let idx: Vec<usize> = (0..self.len()).flat_map(|i| std::iter::repeat_n(i, m)).collect();
        DiagonalBraiding {
            basis: idx.iter().map(|&i| self.basis[i]).collect(),
            q: idx
                .iter()
                .map(|&i| idx.iter().map(|&j| self.q[i][j]).collect())
                .collect(),
            multiplicity: 1,
        }
    }
}

/// Orbit of `(a, χ)` under `S_n` with one representative per point.
///
/// Representatives move as few points as possible (ties broken by image
/// order); the identity comes first and the rest follow in decreasing
/// lexicographic order of `(h·a, h·χ)`.
pub fn orbit_basis(
    flavor: GroupFlavor,
    a: &BitVector,
    chi: &BinaryCharacter,
) -> Result<Vec<BasisLine>> {
    let n = flavor.n();
    check_cap(factorial(n))?;
    let mut perms: Vec<Permutation> = Permutation::all(n).collect();
    perms.sort_by_key(|p| (p.images().enumerate().filter(|(i, x)| i != x).count(), *p));
    let base = chi.canonical(flavor);
    let mut seen = std::collections::HashSet::new();
    let mut lines = Vec::new();
    for h in perms {
        let line = BasisLine {
            h,
            degree: a.permuted(&h)?,
            chi: base.act(&h)?.canonical(flavor),
        };
        if seen.insert((line.degree, line.chi)) {
            lines.push(line);
        }
    }
    let key = |l: &BasisLine| (std::cmp::Reverse(l.degree), std::cmp::Reverse(l.chi));
    lines[1..].sort_by_key(key);
    Ok(lines)
}

fn require_in_a(sigma: &GroupElement) -> Result<BitVector> {
    if !sigma.in_a() {
        return Err(Error::Unsupported(format!(
            "diagonal braidings need σ in A; {sigma} has nontrivial permutation part"
        )));
    }
    Ok(sigma.a())
}

/// `h_i ∈ S_n` with `G = ∪ h_i G^σ`, for `σ ∈ A`.
pub fn coset_reps(sigma: &GroupElement) -> Result<Vec<Permutation>> {
    let a = require_in_a(sigma)?;
    let trivial = BinaryCharacter::trivial(sigma.n());
    Ok(orbit_basis(sigma.flavor(), &a, &trivial)?
        .into_iter()
        .map(|l| l.h)
        .collect())
}

pub fn build_diagonal_braiding(spec: &YdSpec) -> Result<DiagonalBraiding> {
    let a = require_in_a(&spec.sigma)?;
    if spec.deg_mu == 0 {
        return Err(Error::Domain("deg μ must be positive".into()));
    }
    let basis = orbit_basis(spec.flavor(), &a, &spec.chi)?;
    let q = basis
        .iter()
        .map(|li| {
            basis
                .iter()
                .map(|lj| {
                    let g = lj.h.inverse().compose(&li.h);
                    let f = f_value(&g, &a, &spec.chi).expect("ranks agree");
                    if f % 2 == 1 {
                        -1
                    } else {
                        1
                    }
                })
                .collect()
        })
        .collect();
    Ok(DiagonalBraiding {
        basis,
        q,
        multiplicity: spec.deg_mu,
    })
}

/// `|O_σ| · [S_n^σ : (S_n^σ)_χ] · deg μ`.
pub fn dim_yd(spec: &YdSpec) -> Result<u64> {
    let a = require_in_a(&spec.sigma)?;
    Ok(orbit_basis(spec.flavor(), &a, &spec.chi)?.len() as u64 * spec.deg_mu as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CartanOutcome {
    /// Some `q_ii = +1`; the first such line is recorded.
    NotCartan { line: usize },
    Cartan(CartanGraph),
}

/// With every `q_ii = −1`, `a_ij = 0` when `q_ij q_ji = 1` and `−1` otherwise.
pub fn cartan_matrix(braiding: &DiagonalBraiding) -> CartanOutcome {
    if let Some(line) = (0..braiding.len()).find(|&i| braiding.q[i][i] == 1) {
        return CartanOutcome::NotCartan { line };
    }
    let k = braiding.len();
    let adj: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| i != j && braiding.q[i][j] * braiding.q[j][i] == -1)
                .collect()
        })
        .collect();
    CartanOutcome::Cartan(CartanGraph::from_adjacency(&adj))
}

/// Multiplies every coefficient by `sign`.
pub fn shift_braiding(braiding: &DiagonalBraiding, sign: i8) -> DiagonalBraiding {
    let mut out = braiding.clone();
    for row in &mut out.q {
        for x in row {
            *x *= sign;
        }
    }
    out
}

/// Build, take the Cartan matrix of the expanded braiding, and test for
/// finite type.
pub fn braiding_is_finite(spec: &YdSpec) -> Result<bool> {
    let braiding = build_diagonal_braiding(spec)?.expanded();
    Ok(match cartan_matrix(&braiding) {
        CartanOutcome::NotCartan { .. } => false,
        CartanOutcome::Cartan(g) => g.is_finite_type(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(a: &[u8], b: &[u8]) -> YdSpec {
        let n = a.len();
        let f = GroupFlavor::b(n);
        let sigma = GroupElement::from_a(f, BitVector::from_bits(a).unwrap()).unwrap();
        YdSpec::new(sigma, BinaryCharacter::new(BitVector::from_bits(b).unwrap())).unwrap()
    }

    #[test]
    fn coset_rep_examples() {
        let s = spec(&[1, 0, 0], &[0, 0, 0]);
        let reps: Vec<String> = coset_reps(&s.sigma).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(reps, vec!["()", "(1 2)", "(1 3)"]);
        assert_eq!(coset_reps(&spec(&[1, 1, 1], &[0, 0, 0]).sigma).unwrap().len(), 1);
        assert_eq!(coset_reps(&spec(&[1, 1, 0], &[0, 0, 0]).sigma).unwrap().len(), 3);
        let mixed = GroupElement::parse("[1,0,0];(1 2)", GroupFlavor::b(3)).unwrap();
        assert!(matches!(coset_reps(&mixed), Err(Error::Unsupported(_))));
    }

    #[test]
    fn braiding_examples() {
        let br = build_diagonal_braiding(&spec(&[1, 0, 0], &[1, 0, 0])).unwrap();
        assert_eq!(br.len(), 3);
        for i in 0..3 {
            assert_eq!(br.q[i][i], -1);
            for j in 0..3 {
                assert_eq!(br.q[i][j] * br.q[j][i], 1);
            }
        }
        let br = build_diagonal_braiding(&spec(&[1, 0, 0], &[0, 0, 0])).unwrap();
        assert!(br.q.iter().flatten().all(|&x| x == 1));
        let br = build_diagonal_braiding(&spec(&[1, 0, 0], &[1, 1, 0])).unwrap();
        assert_eq!(br.q[0][0], -1);
        let k = br.len();
        assert!((0..k).any(|i| (0..k).any(|j| br.q[i][j] * br.q[j][i] == -1)));
    }

    #[test]
    fn cartan_examples() {
        let mk = |q: Vec<Vec<i8>>| DiagonalBraiding {
            basis: Vec::new(),
            q,
            multiplicity: 1,
        };
        let CartanOutcome::Cartan(g) = cartan_matrix(&mk(vec![vec![-1, 1], vec![1, -1]])) else {
            panic!()
        };
        assert_eq!(g.a[0][1], 0);
        let CartanOutcome::Cartan(g) = cartan_matrix(&mk(vec![vec![-1, -1], vec![1, -1]])) else {
            panic!()
        };
        assert_eq!(g.a[0][1], -1);
        assert_eq!(
            cartan_matrix(&mk(vec![vec![1, 1], vec![1, -1]])),
            CartanOutcome::NotCartan { line: 0 }
        );
    }

    #[test]
    fn shift_examples() {
        let br = build_diagonal_braiding(&spec(&[1, 0, 0], &[1, 1, 0])).unwrap();
        assert_eq!(shift_braiding(&br, 1), br);
        assert_eq!(shift_braiding(&shift_braiding(&br, -1), -1), br);
        let flipped = shift_braiding(&br, -1);
        assert!(matches!(cartan_matrix(&flipped), CartanOutcome::NotCartan { .. }));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_yd(&spec(&[1, 0, 0], &[1, 0, 0])).unwrap(), 3);
        assert_eq!(dim_yd(&spec(&[1, 1, 1], &[1, 0, 0])).unwrap(), 3);
        assert_eq!(dim_yd(&spec(&[1, 1, 0], &[1, 0, 0])).unwrap(), 6);
        assert_eq!(dim_yd(&spec(&[1, 1, 0], &[1, 0, 0]).with_mu(2, None)).unwrap(), 12);
    }
}
