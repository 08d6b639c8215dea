//! Symmetric 2-local interaction terms in Pauli and Bell coordinates.
//!
//! A symmetric term is either `a XX + b YY + c ZZ` (Pauli form) or a weighted
//! sum of triplet projectors with the singlet energy pinned to zero (Bell
//! form). The two pictures are related by a fixed linear map; composing the
//! two conversions returns the input scaled by 2, and we track that factor
//! explicitly instead of dropping global scales.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `a XX + b YY + c ZZ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PauliTerm {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Triplet energies of a symmetric term, singlet fixed at zero.
///
/// `alpha` is the energy of |ψ+⟩, `beta` of |φ+⟩, `gamma` of |φ−⟩.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BellTerm {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl PauliTerm {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::domain("pauli coefficients must be finite"));
        }
        Ok(PauliTerm { a, b, c })
    }

    /// Coefficients in slot order (XX, YY, ZZ).
    pub fn coeffs(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    /// a ≥ b ≥ c.
    pub fn is_canonical(&self) -> bool {
        self.a >= self.b && self.b >= self.c
    }

    /// Eigenvalues in Bell order (ψ+, φ+, φ−, ψ−); the singlet ψ− carries
    /// −a−b−c and each triplet flips one sign.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let (a, b, c) = (self.a, self.b, self.c);
        [a + b - c, a - b + c, -a + b + c, -a - b - c]
    }

    /// Dense 4x4 matrix over |q1 q0⟩ with qubit 0 as the least significant
    /// bit: basis order |00⟩, |01⟩, |10⟩, |11⟩ where index = q0 + 2 q1.
    pub fn matrix(&self) -> [[f64; 4]; 4] {
        let (a, b, c) = (self.a, self.b, self.c);
        // XX flips both bits; YY flips both with sign −1 on equal bits;
        // ZZ is diagonal with (−1)^{q0+q1}.
        [
            [c, 0.0, 0.0, a - b],
            [0.0, -c, a + b, 0.0],
            [0.0, a + b, -c, 0.0],
            [a - b, 0.0, 0.0, c],
        ]
    }
}

impl BellTerm {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite() && gamma.is_finite()) {
            return Err(Error::domain("bell energies must be finite"));
        }
        Ok(BellTerm { alpha, beta, gamma })
    }

    /// α ≥ β ≥ γ.
    pub fn is_canonical(&self) -> bool {
        self.alpha >= self.beta && self.beta >= self.gamma
    }

    /// Energies sorted into canonical order α ≥ β ≥ γ. Valid because
    /// permuting triplet states does not change the problem.
    pub fn canonicalize(&self) -> BellTerm {
        let mut e = [self.alpha, self.beta, self.gamma];
        e.sort_by(|x, y| y.partial_cmp(x).unwrap());
        BellTerm { alpha: e[0], beta: e[1], gamma: e[2] }
    }
}

/// Pauli form to Bell form: α = 2(a+b), β = 2(a+c), γ = 2(b+c), plus the
/// identity offset −(a+b+c) that restores the raw 4x4 matrix. The singlet
/// lands at zero by construction of the offset.
pub fn pauli_to_bell(t: PauliTerm) -> (BellTerm, f64) {
    let bell = BellTerm {
        alpha: 2.0 * (t.a + t.b),
        beta: 2.0 * (t.a + t.c),
        gamma: 2.0 * (t.b + t.c),
    };
    (bell, -(t.a + t.b + t.c))
}

/// Bell form to Pauli form: a = (α+β−γ)/4 etc., with identity offset
/// (α+β+γ)/4. Composing with [`pauli_to_bell`] scales energies by exactly 2.
pub fn bell_to_pauli(t: BellTerm) -> (PauliTerm, f64) {
    let (al, be, ga) = (t.alpha, t.beta, t.gamma);
    let pauli = PauliTerm {
        a: (al + be - ga) / 4.0,
        b: (al - be + ga) / 4.0,
        c: (-al + be + ga) / 4.0,
    };
    (pauli, (al + be + ga) / 4.0)
}

/// Result of bringing a Pauli term to normal form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalForm {
    pub term: PauliTerm,
    /// `permutation[k]` is the input slot that landed in output slot `k`;
    /// stable, so equal coefficients keep their input order.
    pub permutation: [usize; 3],
    /// Positive factor with `term = scale * permuted input`.
    pub scale: f64,
}

/// Sort coefficients to a ≥ b ≥ c (stable) and, when c < 0, rescale by
/// 1/|c| so that c = −1.
pub fn normal_form(t: PauliTerm) -> NormalForm {
    let coeffs = t.coeffs();
    let mut perm = [0usize, 1, 2];
    perm.sort_by(|&i, &j| coeffs[j].partial_cmp(&coeffs[i]).unwrap());
    let sorted = [coeffs[perm[0]], coeffs[perm[1]], coeffs[perm[2]]];
    let scale = if sorted[2] < 0.0 { 1.0 / sorted[2].abs() } else { 1.0 };
    NormalForm {
        term: PauliTerm {
            a: sorted[0] * scale,
            b: sorted[1] * scale,
            c: sorted[2] * scale,
        },
        permutation: perm,
        scale,
    }
}

/// Toy-model term for parameter `s`: the projector sum −s|ψ−⟩⟨ψ−| − |ψ+⟩⟨ψ+|
/// shifted so the singlet sits at zero, i.e. triplet energies {s−1, s, s}
/// in canonical order.
pub fn toy_term(s: f64) -> BellTerm {
    BellTerm { alpha: s, beta: s, gamma: s - 1.0 }.canonicalize()
}

/// The one-parameter family (1, b, −1) interpolating between the EPR point
/// (b = −1) and the trivially product-solvable point (b = 1).
pub fn epr_star_term(b: f64) -> Result<PauliTerm> {
    if !(-1.0..=1.0).contains(&b) {
        return Err(Error::domain(format!(
            "epr* parameter must satisfy -1 <= b <= 1, got {b}"
        )));
    }
    Ok(PauliTerm { a: 1.0, b, c: -1.0 })
}

/// JSON wire form for terms: `{"pauli":[a,b,c]}` or `{"bell":[α,β,γ]}`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermJson {
    Pauli([f64; 3]),
    Bell([f64; 3]),
}

impl TermJson {
    /// Either form as a Bell term (Pauli inputs are converted; the identity
    /// offset is dropped because it does not affect the problem).
    pub fn as_bell(&self) -> Result<BellTerm> {
        match *self {
            TermJson::Bell([al, be, ga]) => BellTerm::new(al, be, ga),
            TermJson::Pauli([a, b, c]) => {
                Ok(pauli_to_bell(PauliTerm::new(a, b, c)?).0)
            }
        }
    }

    pub fn as_pauli(&self) -> Result<PauliTerm> {
        match *self {
            TermJson::Pauli([a, b, c]) => PauliTerm::new(a, b, c),
            TermJson::Bell([al, be, ga]) => {
                Ok(bell_to_pauli(BellTerm::new(al, be, ga)?).0)
            }
        }
    }
}

/// One of the four maximally entangled two-qubit states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BellState {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellState {
    pub const ALL: [BellState; 4] = [
        BellState::PhiPlus,
        BellState::PhiMinus,
        BellState::PsiPlus,
        BellState::PsiMinus,
    ];

    /// Amplitudes over |00⟩, |01⟩, |10⟩, |11⟩ (qubit 0 least significant).
    pub fn vector(&self) -> [Complex64; 4] {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let z = Complex64::new(0.0, 0.0);
        let p = Complex64::new(h, 0.0);
        let m = Complex64::new(-h, 0.0);
        match self {
            BellState::PhiPlus => [p, z, z, p],
            BellState::PhiMinus => [p, z, z, m],
            BellState::PsiPlus => [z, p, p, z],
            BellState::PsiMinus => [z, p, m, z],
        }
    }
}

/// Single-qubit Pauli label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        let z = Complex64::new(0.0, 0.0);
        let one = Complex64::new(1.0, 0.0);
        match self {
            Pauli::X => [[z, one], [one, z]],
            Pauli::Y => [[z, Complex64::new(0.0, -1.0)], [Complex64::new(0.0, 1.0), z]],
            Pauli::Z => [[one, z], [z, -one]],
        }
    }
}

/// Action of a single-qubit Pauli on a Bell state: the image state and a
/// phase from {±1, ±i}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellAction {
    pub state: BellState,
    pub phase: Complex64,
}

/// The full 24-entry action table of σ ⊗ I and I ⊗ σ on the Bell basis.
///
/// Applying the same Pauli twice returns the original state with phase +1,
/// and every entry agrees with the explicit 4x4 matrix-vector product; both
/// facts are enforced by [`BellActionTable::verify`].
pub struct BellActionTable;

impl BellActionTable {
    /// Action of `pauli` on `qubit` (0 or 1, with qubit 0 the first tensor
    /// factor, matching the subscript-1 operator) applied to `state`.
    pub fn apply(pauli: Pauli, qubit: usize, state: BellState) -> BellAction {
        use BellState::*;
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        assert!(qubit < 2, "bell table is defined on a single pair");
        let (s, phase) = match (pauli, qubit, state) {
            (Pauli::X, 0, PhiPlus) => (PsiPlus, one),
            (Pauli::X, 0, PhiMinus) => (PsiMinus, -one),
            (Pauli::X, 0, PsiPlus) => (PhiPlus, one),
            (Pauli::X, 0, PsiMinus) => (PhiMinus, -one),
            (Pauli::X, 1, PhiPlus) => (PsiPlus, one),
            (Pauli::X, 1, PhiMinus) => (PsiMinus, one),
            (Pauli::X, 1, PsiPlus) => (PhiPlus, one),
            (Pauli::X, 1, PsiMinus) => (PhiMinus, one),
            (Pauli::Y, 0, PhiPlus) => (PsiMinus, -i),
            (Pauli::Y, 0, PhiMinus) => (PsiPlus, i),
            (Pauli::Y, 0, PsiPlus) => (PhiMinus, -i),
            (Pauli::Y, 0, PsiMinus) => (PhiPlus, i),
            (Pauli::Y, 1, PhiPlus) => (PsiMinus, i),
            (Pauli::Y, 1, PhiMinus) => (PsiPlus, i),
            (Pauli::Y, 1, PsiPlus) => (PhiMinus, -i),
            (Pauli::Y, 1, PsiMinus) => (PhiPlus, -i),
            (Pauli::Z, 0, PhiPlus) => (PhiMinus, one),
            (Pauli::Z, 0, PhiMinus) => (PhiPlus, one),
            (Pauli::Z, 0, PsiPlus) => (PsiMinus, one),
            (Pauli::Z, 0, PsiMinus) => (PsiPlus, one),
            (Pauli::Z, 1, PhiPlus) => (PhiMinus, one),
            (Pauli::Z, 1, PhiMinus) => (PhiPlus, one),
            (Pauli::Z, 1, PsiPlus) => (PsiMinus, -one),
            (Pauli::Z, 1, PsiMinus) => (PsiPlus, -one),
            _ => unreachable!(),
        };
        BellAction { state: s, phase }
    }

    /// Check every table entry against the explicit matrix action and the
    /// involution σσ = I; returns the largest entrywise deviation.
    pub fn verify() -> f64 {
        let mut worst: f64 = 0.0;
        for pauli in Pauli::ALL {
            for qubit in 0..2 {
                for state in BellState::ALL {
                    let action = Self::apply(pauli, qubit, state);
                    let image = apply_single_pauli(pauli, qubit, &state.vector());
                    let expect = action.state.vector();
                    for k in 0..4 {
                        worst = worst.max((image[k] - action.phase * expect[k]).norm());
                    }
                    // involution: applying the same pauli again restores the state
                    let back = Self::apply(pauli, qubit, action.state);
                    let total = action.phase * back.phase;
                    assert_eq!(back.state, state);
                    worst = worst.max((total - Complex64::new(1.0, 0.0)).norm());
                }
            }
        }
        worst
    }
}

/// σ on one qubit of a two-qubit vector; qubit 0 is the least significant
/// bit and the first tensor factor of the operator subscripts.
fn apply_single_pauli(pauli: Pauli, qubit: usize, v: &[Complex64; 4]) -> [Complex64; 4] {
    let m = pauli.matrix();
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (idx, amp) in v.iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        let bit = (idx >> qubit) & 1;
        for new_bit in 0..2 {
            let coeff = m[new_bit][bit];
            if coeff.norm_sqr() == 0.0 {
                continue;
            }
            let mut j = idx & !(1 << qubit);
            j |= new_bit << qubit;
            out[j] += coeff * amp;
        }
    }
    out
}
