//! Acceptance suite. Prints one line per criterion and exits non-zero if
//! any criterion fails.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use parahopf::bosonization::{
    antipode_forms_agree, bosonise_from_general, check_quasitriangularity_g, BosonisedG, KExtension,
};
use parahopf::braided_hopf::{check_hopf_axioms, SuperParaboson};
use parahopf::report::Report;
use parahopf::representations::{
    build_green_ansatz, casimcom_symbolic, check_k_matrices, k_relations_symbolic, oracle_agreement,
    verify_boson_degeneration, verify_casimcom, FockRep, FockSpec, DEFAULT_DIMENSION_CAP,
};
use parahopf::rewriting::{
    boson_relations, extended_alphabet, generator_alphabet, paraboson_relations, phi_replacement,
};
use parahopf::sampling::WordSampler;
use parahopf::{AlgebraContext, AlgebraKind, ExactElement};

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_report(report: &Report) -> Self {
        let failed = report.failures().count();
        let mut detail = format!("{}/{} checks", report.len() - failed, report.len());
        if let Some(dev) = report.max_deviation() {
            detail.push_str(&format!(", max deviation {dev:.2e}"));
        }
        if let Some(f) = report.failures().next() {
            detail.push_str(&format!(", first failure {} [{}]", f.axiom, f.word));
        }
        Outcome { passed: failed == 0 && !report.is_empty(), detail }
    }

    fn with_budget(mut self, elapsed: Duration, budget: Option<Duration>) -> Self {
        self.detail.push_str(&format!(", {:.2}s", elapsed.as_secs_f64()));
        if let Some(limit) = budget {
            if elapsed > limit {
                self.passed = false;
                self.detail.push_str(&format!(" (over the {}s budget)", limit.as_secs()));
            }
        }
        self
    }
}

fn rep(n: u32, p: u32, cutoff: u32) -> FockRep {
    build_green_ansatz(FockSpec::new(n, p, cutoff).unwrap(), DEFAULT_DIMENSION_CAP).unwrap()
}

fn reduces_to_zero(ctx: &AlgebraContext, items: &[ExactElement]) -> Report {
    items
        .par_iter()
        .map(|a| {
            parahopf::report::CheckEntry::from_result(
                "ideal_reduction",
                a,
                ctx.normal_form(a).map(|r| (r, ExactElement::zero())),
            )
            .with_context(ctx.kind().short_name())
        })
        .collect()
}

fn ideal_reduction() -> Outcome {
    let pb: Vec<ExactElement> = paraboson_relations(3).into_iter().map(|(_, r)| r).collect();
    assert!(pb.len() >= 8 * 27);
    let mut report = reduces_to_zero(&AlgebraContext::paraboson(), &pb);
    report.extend(reduces_to_zero(&AlgebraContext::boson(), &boson_relations(3)));
    Outcome::from_report(&report)
}

fn boson_quotient() -> Outcome {
    let mut report: Report = paraboson_relations::<parahopf::Scalar>(3)
        .par_iter()
        .map(|((x, y, z), r)| {
            parahopf::report::CheckEntry::from_result(
                "phi_quotient",
                format!("[{{{x}, {y}}}, {z}]"),
                phi_replacement(r).map(|v| (v, ExactElement::zero())),
            )
        })
        .collect();
    for (n, cutoff) in [(1, 8), (2, 6), (3, 4)] {
        report.extend(verify_boson_degeneration(&rep(n, 1, cutoff)));
    }
    Outcome::from_report(&report)
}

fn super_hopf() -> Outcome {
    Outcome::from_report(&check_hopf_axioms(&SuperParaboson, 4, 2))
}

fn bosonisation_cross_validation() -> Outcome {
    let mut report = bosonise_from_general(3, 2);
    report.extend(antipode_forms_agree(2));
    Outcome::from_report(&report)
}

fn ordinary_hopf() -> Outcome {
    let mut report = check_hopf_axioms(&BosonisedG, 4, 2);
    report.extend(check_hopf_axioms(&KExtension, 4, 2));
    Outcome::from_report(&report)
}

fn quasitriangular() -> Outcome {
    Outcome::from_report(&check_quasitriangularity_g(3, 2))
}

fn casimir() -> Outcome {
    let mut report = casimcom_symbolic(2, 3);
    for (n, p, d) in [(1, 2, 6), (2, 2, 4)] {
        report.extend(verify_casimcom(&rep(n, p, d), 4));
    }
    Outcome::from_report(&report)
}

fn k_relations() -> Outcome {
    let mut report = k_relations_symbolic(3);
    for (n, p, d) in [(1, 1, 6), (1, 2, 6), (2, 2, 4), (1, 3, 5)] {
        report.extend(check_k_matrices(&rep(n, p, d)));
    }
    Outcome::from_report(&report)
}

fn oracle() -> Outcome {
    const SAMPLES: usize = 500;
    const MAX_LEN: usize = 5;
    let cases: [(u32, u32, u32, &[AlgebraKind]); 4] = [
        (1, 1, 8, &[AlgebraKind::Boson, AlgebraKind::Paraboson, AlgebraKind::ParabosonG, AlgebraKind::ParabosonK]),
        (2, 1, 7, &[AlgebraKind::Boson, AlgebraKind::Paraboson]),
        (1, 2, 8, &[AlgebraKind::Paraboson, AlgebraKind::ParabosonG, AlgebraKind::ParabosonK]),
        (2, 2, 7, &[AlgebraKind::Paraboson, AlgebraKind::ParabosonG, AlgebraKind::ParabosonK]),
    ];
    let mut report = Report::new();
    for (case, (n, p, d, kinds)) in cases.into_iter().enumerate() {
        let r = rep(n, p, d);
        for (k, &kind) in kinds.iter().enumerate() {
            let seed = 1000 * case as u64 + k as u64;
            let words = WordSampler::new(seed, generator_alphabet(kind, n), MAX_LEN).take(SAMPLES);
            report.extend(oracle_agreement(&r, kind, &words));
        }
    }
    Outcome::from_report(&report)
}

fn confluence() -> Outcome {
    const WORDS: usize = 1000;
    let mut report = Report::new();
    for (k, kind) in [AlgebraKind::Boson, AlgebraKind::Paraboson, AlgebraKind::ParabosonG, AlgebraKind::ParabosonK]
        .into_iter()
        .enumerate()
    {
        let ctx = AlgebraContext::new(kind);
        let words = WordSampler::new(77 + k as u64, extended_alphabet(kind, 2), 6).take(WORDS);
        let entries: Report = words
            .par_iter()
            .enumerate()
            .map(|(i, w)| {
                let a = ExactElement::from_word(w.clone());
                let mut first = ChaCha8Rng::seed_from_u64(2 * i as u64);
                let mut second = ChaCha8Rng::seed_from_u64(2 * i as u64 + 1);
                let pair = ctx
                    .normal_form_randomized(&a, &mut first)
                    .and_then(|x| Ok((x, ctx.normal_form_randomized(&a, &mut second)?)));
                parahopf::report::CheckEntry::from_result("randomized_orders_agree", w, pair)
                    .with_context(kind.short_name())
            })
            .collect();
        report.extend(entries);
    }
    Outcome::from_report(&report)
}

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: [Criterion; 10] = [
        ("ideal generators reduce to zero", ideal_reduction, Some(Duration::from_secs(10))),
        ("boson quotient and order-1 CCR", boson_quotient, None),
        ("super-Hopf axioms", super_hopf, Some(Duration::from_secs(120))),
        ("smash product cross-validation", bosonisation_cross_validation, None),
        ("ordinary Hopf axioms for g and K extensions", ordinary_hopf, None),
        ("quasitriangularity with R_g", quasitriangular, None),
        ("number-operator commutator", casimir, None),
        ("K relations", k_relations, None),
        ("symbolic vs matrix agreement", oracle, None),
        ("randomized rewrite orders agree", confluence, None),
    ];
    let total = Instant::now();
    let mut all = true;
    for (i, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run().with_budget(start.elapsed(), budget);
        all &= outcome.passed;
        let verdict = if outcome.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict} {name} ({})", i + 1, outcome.detail);
    }
    let elapsed = total.elapsed();
    let within = elapsed <= Duration::from_secs(300);
    all &= within;
    println!(
        "acceptance: {} in {:.1}s{}",
        if all { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        if within { "" } else { " (over the 300s budget)" }
    );
    if !all {
        std::process::exit(1);
    }
}
