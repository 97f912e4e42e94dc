//! Truncated Fock-space realizations built from the Green ansatz.
//!
//! Each paraboson is a sum of `p` boson copies glued by Clifford factors:
//! `B_i^± = Σ_α γ_α ⊗ a_i^{(α)±}`, where the `γ_α` are Jordan–Wigner
//! products of Pauli matrices on `⌈p/2⌉` qubits. Components with `α ≠ β`
//! then anticommute, which is what makes the trilinear relations hold.
//!
//! Basis states are indexed by `clifford · d^{np} + Σ_pos occ_pos · d^pos`
//! with `pos = (i − 1)·p + α`.

mod oracle;
mod sparse;

use std::collections::HashMap;
use std::fmt::Debug;

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braided_hopf::HopfStructure;
use crate::rewriting::{anticommutators, ladder_alphabet, RewriteError};
use crate::scalar::Coefficient;
use crate::terms::{Element, Generator, Ladder, Sign, Word};

pub use oracle::{
    casimcom_symbolic, check_hermiticity, check_k_matrices, check_number_operator, compare_on_guard,
    k_relations_symbolic, oracle_agreement, run_oracle, tensor_rep_via_coproduct, verify_boson_degeneration,
    verify_casimcom, verify_relations, OracleConfig,
};
pub use sparse::{basis_vector, max_abs, max_abs_diff, DenseExport, SparseMatrix, SparseVec};

pub const DEFAULT_DIMENSION_CAP: usize = 20_000;
/// Environment variable overriding [`DEFAULT_DIMENSION_CAP`].
pub const DIMENSION_CAP_ENV: &str = "PARAHOPF_DIM_CAP";

/// Tolerance for directly constructed identities.
pub const TOL_DIRECT: f64 = 1e-10;
/// Tolerance for composed identities (normal-form comparisons).
pub const TOL_COMPOSED: f64 = 1e-9;
/// Tolerance for `K⁺K⁻ = 1`.
pub const TOL_KK: f64 = 1e-12;

/// Floating-point scalar usable in a representation.
pub trait Real: Float + FloatConst + Debug + Send + Sync + 'static {}

impl<T: Float + FloatConst + Debug + Send + Sync + 'static> Real for T {}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepresentationError {
    #[error("invalid Fock spec: {0}")]
    InvalidSpec(String),
    #[error("dimension {dimension} exceeds the cap {cap}")]
    DimensionOverflow { dimension: String, cap: usize },
    #[error("letter {letter} cannot be represented: {reason}")]
    UnrepresentableLetter { letter: Generator, reason: String },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

/// `n` modes, order `p`, `cutoff` boson levels per component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockSpec {
    pub n: u32,
    pub p: u32,
    pub cutoff: u32,
}

impl FockSpec {
    pub fn new(n: u32, p: u32, cutoff: u32) -> Result<Self, RepresentationError> {
        if n < 1 || p < 1 || cutoff < 2 {
            return Err(RepresentationError::InvalidSpec(format!(
                "need n >= 1, p >= 1, cutoff >= 2 (got n={n}, p={p}, cutoff={cutoff})"
            )));
        }
        Ok(FockSpec { n, p, cutoff })
    }

    pub fn clifford_qubits(&self) -> u32 {
        self.p.div_ceil(2)
    }

    /// Number of boson components `n·p`.
    pub fn components(&self) -> u32 {
        self.n * self.p
    }

    /// `d^{np}`, if it fits in `usize`.
    pub fn boson_dimension(&self) -> Option<usize> {
        (self.cutoff as usize).checked_pow(self.components())
    }

    /// `2^⌈p/2⌉ · d^{np}`, if it fits in `usize`.
    pub fn dimension(&self) -> Option<usize> {
        self.boson_dimension()?.checked_mul(1usize.checked_shl(self.clifford_qubits())?)
    }

    fn dimension_text(&self) -> String {
        self.dimension().map_or_else(
            || format!("2^{} * {}^{}", self.clifford_qubits(), self.cutoff, self.components()),
            |d| d.to_string(),
        )
    }

    pub fn vacuum_energy(&self) -> f64 {
        f64::from(self.components()) / 2.0
    }
}

/// Dimension cap from the environment, falling back to the default.
pub fn dimension_cap_from_env() -> usize {
    std::env::var(DIMENSION_CAP_ENV).ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_DIMENSION_CAP)
}

fn real<T: Real>(x: f64) -> T {
    T::from(x).expect("f64 converts into the scalar type")
}

fn to_complex<T: Real, C: Coefficient>(c: &C) -> Complex<T> {
    let z = c.to_c64();
    Complex::new(real(z.re), real(z.im))
}

/// Anything that can act on sparse vectors letter by letter.
pub trait Representation<T: Real>: Sync {
    fn dimension(&self) -> usize;

    fn apply_letter(&self, g: Generator, v: &SparseVec<T>) -> Result<SparseVec<T>, RepresentationError>;

    /// Whether a word of ladder weight `weight` acts on `state` without
    /// meeting the cutoff.
    fn is_guarded(&self, state: usize, weight: usize) -> bool;

    fn guarded_states(&self, weight: usize) -> Vec<usize> {
        (0..self.dimension()).filter(|&s| self.is_guarded(s, weight)).collect()
    }

    fn apply_word(&self, w: &Word, v: &SparseVec<T>) -> Result<SparseVec<T>, RepresentationError> {
        let mut out = v.clone();
        for &g in w.letters().iter().rev() {
            out = self.apply_letter(g, &out)?;
        }
        Ok(out)
    }

    fn apply_element<C: Coefficient>(
        &self,
        a: &Element<C>,
        v: &SparseVec<T>,
    ) -> Result<SparseVec<T>, RepresentationError> {
        let mut out = SparseVec::new();
        for (w, c) in a.terms() {
            sparse::axpy(&mut out, to_complex(c), &self.apply_word(w, v)?);
        }
        Ok(out)
    }

    /// Full matrix of `a`.
    fn represent<C: Coefficient>(&self, a: &Element<C>) -> Result<SparseMatrix<T>, RepresentationError> {
        let dim = self.dimension();
        let cols = (0..dim).map(|j| self.apply_element(a, &basis_vector(j))).collect::<Result<Vec<_>, _>>()?;
        Ok(SparseMatrix::from_columns(dim, cols))
    }
}

/// Largest ladder weight over the words of `a`.
pub fn guard_weight<C: Coefficient>(a: &Element<C>) -> usize {
    a.words().map(Word::ladder_weight).max().unwrap_or(0)
}

/// Green-ansatz realization of every letter with mode `<= n`.
#[derive(Clone, Debug)]
pub struct MatrixRep<T> {
    spec: FockSpec,
    dim: usize,
    boson_dim: usize,
    letters: HashMap<Generator, SparseMatrix<T>>,
    number_diag: Vec<T>,
}

pub type FockRep = MatrixRep<f64>;

/// Build the representation, refusing dimensions above `cap`.
pub fn build_green_ansatz<T: Real>(spec: FockSpec, cap: usize) -> Result<MatrixRep<T>, RepresentationError> {
    let dim = match spec.dimension() {
        Some(d) if d <= cap => d,
        _ => return Err(RepresentationError::DimensionOverflow { dimension: spec.dimension_text(), cap }),
    };
    let boson_dim = spec.boson_dimension().expect("bounded by dim");
    let mut rep = MatrixRep { spec, dim, boson_dim, letters: HashMap::new(), number_diag: Vec::new() };
    for g in ladder_alphabet(spec.n) {
        if let Generator::B(l) = g {
            let m = rep.ladder_matrix(l);
            rep.letters.insert(g, m);
        }
    }
    for e in anticommutators(spec.n) {
        let x = &rep.letters[&Generator::B(e.first())];
        let y = &rep.letters[&Generator::B(e.second())];
        let m = x.mul(y).add_scaled(&y.mul(x), Complex::new(T::one(), T::zero()));
        rep.letters.insert(Generator::E(e), m);
    }
    let shift = spec.vacuum_energy();
    rep.number_diag = (0..dim).map(|s| real::<T>(rep.total_occupancy(s) as f64 + shift)).collect();
    let phase = |sign: T, t: T| Complex::new(T::zero(), sign * T::PI() * t).exp();
    let k_plus = rep.number_diag.iter().map(|&t| phase(T::one(), t)).collect();
    let k_minus = rep.number_diag.iter().map(|&t| phase(-T::one(), t)).collect();
    // g = exp(iπ(N − np/2)): the shift makes g² = 1 for every (n, p)
    let g = rep.number_diag.iter().map(|&t| phase(T::one(), t - real(shift))).collect();
    rep.letters.insert(Generator::KPlus, SparseMatrix::diagonal(k_plus));
    rep.letters.insert(Generator::KMinus, SparseMatrix::diagonal(k_minus));
    rep.letters.insert(Generator::G, SparseMatrix::diagonal(g));
    Ok(rep)
}

impl<T: Real> MatrixRep<T> {
    pub fn spec(&self) -> FockSpec {
        self.spec
    }

    /// Occupancy of component `α` of mode `i` in `state`.
    pub fn occupancy(&self, state: usize, mode: u32, alpha: u32) -> u32 {
        let pos = (mode - 1) * self.spec.p + alpha;
        let d = self.spec.cutoff as usize;
        ((state % self.boson_dim) / d.pow(pos) % d) as u32
    }

    fn occupancies(&self, state: usize) -> impl Iterator<Item = u32> + '_ {
        let d = self.spec.cutoff as usize;
        let mut rest = state % self.boson_dim;
        (0..self.spec.components()).map(move |_| {
            let o = rest % d;
            rest /= d;
            o as u32
        })
    }

    pub fn total_occupancy(&self, state: usize) -> u32 {
        self.occupancies(state).sum()
    }

    /// States with every occupancy zero (one per Clifford basis vector).
    pub fn vacuum_states(&self) -> Vec<usize> {
        (0..self.dim / self.boson_dim).map(|c| c * self.boson_dim).collect()
    }

    /// `γ_α` on a Clifford basis index: `(image, phase)`.
    fn clifford(&self, alpha: u32, c: usize) -> (usize, Complex<T>) {
        let k = alpha / 2;
        let below = c & ((1usize << k) - 1);
        let mut phase = if below.count_ones() % 2 == 1 {
            Complex::new(-T::one(), T::zero())
        } else {
            Complex::new(T::one(), T::zero())
        };
        let bit = (c >> k) & 1;
        if alpha % 2 == 1 {
            // Y|0> = i|1>, Y|1> = -i|0>
            let i = Complex::new(T::zero(), T::one());
            phase = phase * if bit == 0 { i } else { -i };
        }
        (c ^ (1 << k), phase)
    }

    fn ladder_matrix(&self, l: Ladder) -> SparseMatrix<T> {
        let d = self.spec.cutoff;
        let cols = (0..self.dim)
            .map(|s| {
                let mut col = SparseVec::new();
                let (c, b) = (s / self.boson_dim, s % self.boson_dim);
                for alpha in 0..self.spec.p {
                    let pos = (l.mode - 1) * self.spec.p + alpha;
                    let stride = (d as usize).pow(pos);
                    let occ = self.occupancy(s, l.mode, alpha);
                    let (target, amp) = match l.sign {
                        Sign::Plus if occ + 1 < d => (b + stride, f64::from(occ + 1).sqrt()),
                        Sign::Minus if occ > 0 => (b - stride, f64::from(occ).sqrt()),
                        _ => continue,
                    };
                    let (c2, phase) = self.clifford(alpha, c);
                    let slot =
                        col.entry(c2 * self.boson_dim + target).or_insert_with(|| Complex::new(T::zero(), T::zero()));
                    *slot = *slot + phase * real::<T>(amp);
                }
                col
            })
            .collect();
        SparseMatrix::from_columns(self.dim, cols)
    }

    /// Matrix of a single letter.
    pub fn letter(&self, g: Generator) -> Result<&SparseMatrix<T>, RepresentationError> {
        self.letters.get(&g).ok_or_else(|| RepresentationError::UnrepresentableLetter {
            letter: g,
            reason: format!("mode exceeds n = {}", self.spec.n),
        })
    }

    /// `N = ½ Σ_i {B_i^+, B_i^-}` as computed from the ladder matrices.
    pub fn number_operator(&self) -> SparseMatrix<T> {
        let half = Complex::new(real::<T>(0.5), T::zero());
        (1..=self.spec.n).fold(SparseMatrix::zero(self.dim), |acc, i| {
            let e = &self.letters[&Generator::e(Ladder::plus(i), Ladder::minus(i))];
            acc.add_scaled(e, half)
        })
    }

    /// Spectrum of `N`: total occupancy plus `np/2` on each basis state.
    pub fn number_spectrum(&self) -> &[T] {
        &self.number_diag
    }

    /// `(K⁺, K⁻) = (exp(iπN), exp(−iπN))`, diagonal.
    pub fn k_matrices(&self) -> (&SparseMatrix<T>, &SparseMatrix<T>) {
        (&self.letters[&Generator::KPlus], &self.letters[&Generator::KMinus])
    }

    pub fn g_matrix(&self) -> &SparseMatrix<T> {
        &self.letters[&Generator::G]
    }

    /// Dense export of one letter's matrix.
    pub fn export_letter(&self, g: Generator) -> Result<DenseExport<T>, RepresentationError> {
        Ok(self.letter(g)?.to_dense())
    }
}

impl<T: Real> Representation<T> for MatrixRep<T> {
    fn dimension(&self) -> usize {
        self.dim
    }

    fn apply_letter(&self, g: Generator, v: &SparseVec<T>) -> Result<SparseVec<T>, RepresentationError> {
        Ok(self.letter(g)?.apply(v))
    }

    fn is_guarded(&self, state: usize, weight: usize) -> bool {
        let d = self.spec.cutoff as usize;
        weight <= d && self.occupancies(state).all(|o| o as usize <= d - weight)
    }
}

/// `ρ₂ = (ρ⊗ρ)∘Δ` on the tensor square, with `Δ` from a Hopf structure.
pub struct TensorRep<'a, T> {
    base: &'a MatrixRep<T>,
    coproducts: HashMap<Generator, Vec<(Word, Word, Complex<T>)>>,
}

impl<'a, T: Real> TensorRep<'a, T> {
    pub fn new<H: HopfStructure>(base: &'a MatrixRep<T>, hopf: &H) -> Result<Self, RepresentationError> {
        let mut coproducts = HashMap::new();
        for g in hopf.alphabet(base.spec.n) {
            let delta = hopf.coproduct(&Element::<crate::Scalar>::generator(g))?;
            let legs = delta.terms().map(|([a, b], c)| (a.clone(), b.clone(), to_complex(c))).collect();
            coproducts.insert(g, legs);
        }
        Ok(TensorRep { base, coproducts })
    }
}

impl<T: Real> Representation<T> for TensorRep<'_, T> {
    fn dimension(&self) -> usize {
        self.base.dim * self.base.dim
    }

    fn apply_letter(&self, g: Generator, v: &SparseVec<T>) -> Result<SparseVec<T>, RepresentationError> {
        let legs = self.coproducts.get(&g).ok_or_else(|| RepresentationError::UnrepresentableLetter {
            letter: g,
            reason: "not a generator of the tensor representation".into(),
        })?;
        let dim = self.base.dim;
        let mut out = SparseVec::new();
        for (&idx, &amp) in v {
            let (s1, s2) = (idx / dim, idx % dim);
            for (a, b, c) in legs {
                let left = self.base.apply_word(a, &basis_vector(s1))?;
                let right = self.base.apply_word(b, &basis_vector(s2))?;
                for (&i, &x) in &left {
                    for (&j, &y) in &right {
                        let slot = out.entry(i * dim + j).or_insert_with(|| Complex::new(T::zero(), T::zero()));
                        *slot = *slot + *c * amp * x * y;
                    }
                }
            }
        }
        Ok(out)
    }

    fn is_guarded(&self, state: usize, weight: usize) -> bool {
        let dim = self.base.dim;
        self.base.is_guarded(state / dim, weight) && self.base.is_guarded(state % dim, weight)
    }

    fn guarded_states(&self, weight: usize) -> Vec<usize> {
        let single = self.base.guarded_states(weight);
        let dim = self.base.dim;
        single.iter().flat_map(|&a| single.iter().map(move |&b| a * dim + b)).collect()
    }
}
