//! Numerical checks run against a [`MatrixRep`].

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    basis_vector, build_green_ansatz, guard_weight, max_abs_diff, real, MatrixRep, Real, Representation,
    RepresentationError, SparseVec, TensorRep, TOL_COMPOSED, TOL_DIRECT, TOL_KK,
};
use crate::bosonization::{BosonisedG, KExtension};
use crate::report::{CheckEntry, Report};
use crate::rewriting::{boson_relations, generator_alphabet, paraboson_relations, AlgebraContext, AlgebraKind};
use crate::sampling::WordSampler;
use crate::scalar::{rational, Scalar};
use crate::terms::{Element, Generator, Ladder, Sign, Word};

type El = Element<Scalar>;

fn b(sign: Sign, i: u32) -> El {
    El::generator(Generator::b(sign, i))
}

/// Largest deviation between `lhs` and `rhs` over the columns of states
/// guarded for `weight`. An empty guard is reported as an error, never as
/// a pass.
pub fn compare_on_guard<T: Real, R: Representation<T>>(
    rep: &R,
    lhs: &El,
    rhs: &El,
    weight: usize,
    tolerance: f64,
    axiom: &str,
    label: &str,
) -> CheckEntry {
    let states = rep.guarded_states(weight);
    if states.is_empty() {
        return CheckEntry::error(axiom, label, format!("no states guarded for weight {weight}"));
    }
    let mut worst = 0.0f64;
    for s in states {
        let e = basis_vector(s);
        let diff = rep.apply_element(lhs, &e).and_then(|x| Ok(max_abs_diff(&x, &rep.apply_element(rhs, &e)?)));
        match diff {
            Ok(d) => worst = worst.max(d.to_f64().unwrap_or(f64::INFINITY)),
            Err(err) => return CheckEntry::error(axiom, label, err),
        }
    }
    CheckEntry::numeric(axiom, label, worst, tolerance)
}

fn zero_on_guard<T: Real, R: Representation<T>>(rep: &R, a: &El, tol: f64, axiom: &str, label: &str) -> CheckEntry {
    compare_on_guard(rep, a, &El::zero(), guard_weight(a), tol, axiom, label)
}

/// Every paraboson relation with modes `<= n`, and the vacuum condition
/// `B_i^- B_i^+ |0> = p |0>`.
pub fn verify_relations<T: Real>(rep: &MatrixRep<T>) -> Report {
    let n = rep.spec().n;
    let mut report: Report = paraboson_relations::<Scalar>(n)
        .par_iter()
        .map(|((x, y, z), r)| zero_on_guard(rep, r, TOL_DIRECT, "paraboson_relation", &format!("[{{{x}, {y}}}, {z}]")))
        .collect();
    let p = f64::from(rep.spec().p);
    for i in 1..=n {
        let w = &b(Sign::Minus, i) * &b(Sign::Plus, i);
        let mut worst = 0.0f64;
        for vac in rep.vacuum_states() {
            let e = basis_vector::<T>(vac);
            let expected: SparseVec<T> = [(vac, Complex::new(real::<T>(p), T::zero()))].into_iter().collect();
            match rep.apply_element(&w, &e) {
                Ok(v) => worst = worst.max(max_abs_diff(&v, &expected).to_f64().unwrap_or(f64::INFINITY)),
                Err(err) => {
                    report.push(CheckEntry::error("vacuum_relation", w.to_string(), err));
                    continue;
                }
            }
        }
        report.push(CheckEntry::numeric("vacuum_relation", w.to_string(), worst, TOL_DIRECT));
    }
    report
}

/// Order 1: the canonical commutation relations hold.
pub fn verify_boson_degeneration<T: Real>(rep: &MatrixRep<T>) -> Report {
    boson_relations::<Scalar>(rep.spec().n)
        .par_iter()
        .map(|r| zero_on_guard(rep, r, TOL_DIRECT, "boson_degeneration", &r.to_string()))
        .collect()
}

/// `B_i^+ = (B_i^-)†` on guarded columns.
pub fn check_hermiticity<T: Real>(rep: &MatrixRep<T>) -> Report {
    (1..=rep.spec().n)
        .map(|i| {
            let label = format!("B+{i} vs (B-{i})^dagger");
            let (plus, minus) = match (rep.letter(Generator::b_plus(i)), rep.letter(Generator::b_minus(i))) {
                (Ok(p), Ok(m)) => (p, m.adjoint()),
                (Err(e), _) | (_, Err(e)) => return CheckEntry::error("hermiticity", label, e),
            };
            let worst = rep
                .guarded_states(1)
                .into_iter()
                .map(|s| max_abs_diff(&plus.column(s), &minus.column(s)).to_f64().unwrap_or(f64::INFINITY))
                .fold(0.0, f64::max);
            CheckEntry::numeric("hermiticity", label, worst, TOL_DIRECT)
        })
        .collect()
}

/// `N` from the ladder matrices is diagonal with the expected spectrum on
/// guarded states, and its vacuum eigenvalue is `np/2`.
pub fn check_number_operator<T: Real>(rep: &MatrixRep<T>) -> Report {
    let n_mat = rep.number_operator();
    let spectrum = rep.number_spectrum();
    let worst = rep
        .guarded_states(2)
        .into_iter()
        .map(|s| {
            let expected = [(s, Complex::new(spectrum[s], T::zero()))].into_iter().collect();
            max_abs_diff(&n_mat.column(s), &expected).to_f64().unwrap_or(f64::INFINITY)
        })
        .fold(0.0, f64::max);
    let vac = rep.vacuum_states()[0];
    let vac_value = n_mat.get(vac, vac).re.to_f64().unwrap_or(f64::NAN);
    [
        CheckEntry::numeric("number_operator_diagonal", "N", worst, TOL_DIRECT),
        CheckEntry::numeric(
            "number_operator_vacuum",
            format!("N|0> vs {}|0>", rep.spec().vacuum_energy()),
            (vac_value - rep.spec().vacuum_energy()).abs(),
            TOL_DIRECT,
        ),
    ]
    .into_iter()
    .collect()
}

/// `[N^m, B_i^+] = B_i^+((N+1)^m − N^m)` for `m = 0..=m_max`, with `N`
/// acting through its spectrum.
pub fn verify_casimcom<T: Real>(rep: &MatrixRep<T>, m_max: u32) -> Report {
    let spectrum = rep.number_spectrum();
    let power = |v: &SparseVec<T>, shift: T, m: u32| -> SparseVec<T> {
        v.iter().map(|(&s, &c)| (s, c * (spectrum[s] + shift).powi(m as i32))).collect()
    };
    let mut cases = Vec::new();
    for m in 0..=m_max {
        for i in 1..=rep.spec().n {
            cases.push((m, i));
        }
    }
    let states = rep.guarded_states(1);
    cases
        .par_iter()
        .map(|&(m, i)| {
            let label = format!("[N^{m}, B+{i}]");
            let bp = match rep.letter(Generator::b_plus(i)) {
                Ok(x) => x,
                Err(e) => return CheckEntry::error("casimir_commutator", label, e),
            };
            if states.is_empty() {
                return CheckEntry::error("casimir_commutator", label, "no guarded states");
            }
            let mut worst = 0.0f64;
            for &s in &states {
                let e = basis_vector::<T>(s);
                let mut lhs = power(&bp.apply(&e), T::zero(), m);
                let right = bp.apply(&power(&e, T::zero(), m));
                super::sparse::axpy(&mut lhs, Complex::new(-T::one(), T::zero()), &right);
                let mut diff = power(&e, T::one(), m);
                super::sparse::axpy(&mut diff, Complex::new(-T::one(), T::zero()), &power(&e, T::zero(), m));
                let rhs = bp.apply(&diff);
                worst = worst.max(max_abs_diff(&lhs, &rhs).to_f64().unwrap_or(f64::INFINITY));
            }
            CheckEntry::numeric("casimir_commutator", label, worst, TOL_COMPOSED)
        })
        .collect()
}

fn element_power(a: &El, m: u32, ctx: &AlgebraContext) -> Result<El, crate::RewriteError> {
    let mut acc = El::one();
    for _ in 0..m {
        acc = ctx.normal_form(&(&acc * a))?;
    }
    Ok(acc)
}

/// Exact check of `[N^m, B_i^+] = B_i^+((N+1)^m − N^m)` in the paraboson
/// algebra with `N = ½ Σ_i E(i+, i−)`, for every `n <= n_max`, `m <= m_max`.
pub fn casimcom_symbolic(n_max: u32, m_max: u32) -> Report {
    let ctx = AlgebraContext::paraboson();
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for m in 0..=m_max {
            for i in 1..=n {
                cases.push((n, m, i));
            }
        }
    }
    cases
        .par_iter()
        .map(|&(n, m, i)| {
            let number: El = (1..=n)
                .map(|k| (Word::letter(Generator::e(Ladder::plus(k), Ladder::minus(k))), rational(1, 2)))
                .collect();
            let bp = b(Sign::Plus, i);
            let sides = (|| {
                let nm = element_power(&number, m, &ctx)?;
                let shifted = element_power(&(&number + &El::one()), m, &ctx)?;
                let lhs = ctx.normal_form(&(&(&nm * &bp) - &(&bp * &nm)))?;
                let rhs = ctx.normal_form(&(&bp * &(&shifted - &nm)))?;
                Ok::<_, crate::RewriteError>((lhs, rhs))
            })();
            CheckEntry::from_result("casimir_symbolic", format!("n={n} [N^{m}, B+{i}]"), sides).with_context("pb")
        })
        .collect()
}

/// `{K^±, B_i^±} = 0` and `K⁺K⁻ = K⁻K⁺ = 1` in the `K±` algebra.
pub fn k_relations_symbolic(max_index: u32) -> Report {
    let ctx = AlgebraContext::paraboson_k();
    let (kp, km) = (El::generator(Generator::KPlus), El::generator(Generator::KMinus));
    let mut items: Vec<(String, El)> = Vec::new();
    for k in [&kp, &km] {
        for i in 1..=max_index {
            for s in Sign::BOTH {
                let x = b(s, i);
                items.push((format!("{{{k}, {x}}}"), &(k * &x) + &(&x * k)));
            }
        }
    }
    items.push(("K+ K- - I".into(), &(&kp * &km) - &El::one()));
    items.push(("K- K+ - I".into(), &(&km * &kp) - &El::one()));
    items
        .into_iter()
        .map(|(label, a)| {
            CheckEntry::from_result("k_relation_symbolic", label, ctx.normal_form(&a).map(|r| (r, El::zero())))
                .with_context("pbk")
        })
        .collect()
}

/// `{K^±, B_i^±} = 0`, `K⁺K⁻ = K⁻K⁺ = 1`, `K⁺² = exp(2iπN)`, and whether
/// `K⁺²` is the identity (expected exactly when `np` is even).
pub fn check_k_matrices<T: Real>(rep: &MatrixRep<T>) -> Report {
    let (kp, km) = (El::generator(Generator::KPlus), El::generator(Generator::KMinus));
    let mut report = Report::new();
    for k in [&kp, &km] {
        for i in 1..=rep.spec().n {
            for s in Sign::BOTH {
                let x = b(s, i);
                let anti = &(k * &x) + &(&x * k);
                report.push(zero_on_guard(rep, &anti, TOL_DIRECT, "k_anticommutation", &format!("{{{k}, {x}}}")));
            }
        }
    }
    for (label, a) in [("K+ K- - I", &(&kp * &km) - &El::one()), ("K- K+ - I", &(&km * &kp) - &El::one())] {
        report.push(compare_on_guard(rep, &a, &El::zero(), 0, TOL_KK, "k_inverse", label));
    }
    let spectrum = rep.number_spectrum();
    let (kp_mat, _) = rep.k_matrices();
    let sq = kp_mat.mul(kp_mat);
    let mut dev_exp = 0.0f64;
    let mut dev_id = 0.0f64;
    for (s, z) in sq.diagonal_entries().into_iter().enumerate() {
        let expected = Complex::new(T::zero(), real::<T>(2.0) * T::PI() * spectrum[s]).exp();
        dev_exp = dev_exp.max((z - expected).norm().to_f64().unwrap_or(f64::INFINITY));
        dev_id = dev_id.max((z - Complex::new(T::one(), T::zero())).norm().to_f64().unwrap_or(f64::INFINITY));
    }
    let off_diagonal = sq.nnz() != sq.dim();
    report.push(CheckEntry::numeric(
        "k_square_spectrum",
        "K+ K+ vs exp(2 i pi N)",
        if off_diagonal { f64::INFINITY } else { dev_exp },
        TOL_KK,
    ));
    let np_even = rep.spec().components().is_multiple_of(2);
    report.push(CheckEntry::compare(
        "k_square_is_identity",
        format!("K+ K+ = I for n*p = {}", rep.spec().components()),
        &(dev_id <= TOL_KK),
        &np_even,
    ));
    let g = El::generator(Generator::G);
    report.push(compare_on_guard(rep, &(&g * &g), &El::one(), 0, TOL_KK, "g_involution", "g g - I"));
    report
}

/// Defining relations of `P_B(g)` or `P_B(K±)` vanish under
/// `ρ₂ = (ρ⊗ρ)∘Δ` on the guarded tensor square.
pub fn tensor_rep_via_coproduct<T: Real>(rep: &MatrixRep<T>, kind: AlgebraKind) -> Result<Report, RepresentationError> {
    use crate::braided_hopf::HopfStructure;
    let n = rep.spec().n;
    let (relations, tensor) = match kind {
        AlgebraKind::ParabosonG => (BosonisedG.relations(n), TensorRep::new(rep, &BosonisedG)?),
        AlgebraKind::ParabosonK => (KExtension.relations(n), TensorRep::new(rep, &KExtension)?),
        other => {
            return Err(RepresentationError::InvalidSpec(format!(
                "tensor representation needs pbg or pbk, got {other}"
            )))
        }
    };
    Ok(relations
        .par_iter()
        .map(|(label, r)| {
            zero_on_guard(&tensor, r, TOL_COMPOSED, "tensor_representation", label).with_context(kind.short_name())
        })
        .collect())
}

/// `ρ(w) = ρ(normal_form(w))` on guarded columns for each word.
pub fn oracle_agreement<T: Real>(rep: &MatrixRep<T>, kind: AlgebraKind, words: &[Word]) -> Report {
    let ctx = AlgebraContext::new(kind);
    words
        .par_iter()
        .map(|w| {
            let a = El::from_word(w.clone());
            let entry = match ctx.normal_form(&a) {
                Ok(nf) => {
                    compare_on_guard(rep, &a, &nf, w.ladder_weight(), TOL_COMPOSED, "oracle_agreement", &w.to_string())
                }
                Err(e) => CheckEntry::error("oracle_agreement", w, e),
            };
            entry.with_context(kind.short_name())
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    pub n: u32,
    pub p: u32,
    pub cutoff: u32,
    pub seed: u64,
    /// Random words per context.
    pub samples: usize,
    /// Requested sample length; capped at `cutoff − 1` so guards stay non-empty.
    pub max_len: usize,
    pub casimir_mmax: u32,
    pub dimension_cap: usize,
}

impl OracleConfig {
    pub fn effective_max_len(&self) -> usize {
        self.max_len.min(self.cutoff.saturating_sub(1) as usize).max(1)
    }
}

/// Full oracle run: bootstrap relations, Hermiticity, number operator,
/// Casimir identity (matrix and symbolic), K checks, tensor-square
/// representations, and seeded agreement between words and their normal
/// forms in every applicable context.
pub fn run_oracle(config: &OracleConfig) -> Result<Report, RepresentationError> {
    let spec = super::FockSpec::new(config.n, config.p, config.cutoff)?;
    let rep = build_green_ansatz::<f64>(spec, config.dimension_cap)?;
    let mut report = verify_relations(&rep);
    if spec.p == 1 {
        report.extend(verify_boson_degeneration(&rep).with_context("boson"));
    }
    report.extend(check_hermiticity(&rep));
    report.extend(check_number_operator(&rep));
    report.extend(verify_casimcom(&rep, config.casimir_mmax));
    if spec.n <= 2 {
        report.extend(casimcom_symbolic(spec.n, config.casimir_mmax.min(3)));
    }
    report.extend(check_k_matrices(&rep));
    report.extend(k_relations_symbolic(spec.n.min(2)));
    // the tensor square has dim² states; keep it to small bases
    if rep.dimension() <= 1024 {
        report.extend(tensor_rep_via_coproduct(&rep, AlgebraKind::ParabosonG)?);
        report.extend(tensor_rep_via_coproduct(&rep, AlgebraKind::ParabosonK)?);
    }
    let mut kinds = vec![AlgebraKind::Paraboson, AlgebraKind::ParabosonG, AlgebraKind::ParabosonK];
    if spec.p == 1 {
        kinds.insert(0, AlgebraKind::Boson);
    }
    let max_index = spec.n.min(2);
    for (offset, kind) in kinds.into_iter().enumerate() {
        let mut sampler = WordSampler::new(
            config.seed.wrapping_add(offset as u64),
            generator_alphabet(kind, max_index),
            config.effective_max_len(),
        );
        report.extend(oracle_agreement(&rep, kind, &sampler.take(config.samples)));
    }
    Ok(report)
}
