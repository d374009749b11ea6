//! Runs one check over a batch of instances and collects the reports.

use coaxal_core::bary::{HPoint, TriangleMetric};
use coaxal_core::centers::{named_center, CenterId, KParam};
use coaxal_core::constructions::{euler_line, identity_derived};
use coaxal_core::scalar::{convert, float_tolerance};
use coaxal_core::theorems::{
    check_inversion_suite, check_lemma1, check_lemma2, check_lemma3, check_lemma4, check_lemma6, check_lemma8,
    check_lemma9, check_ph_remark, check_theorem10, check_theorem5, check_theorem7, degenerate_report,
    incenter_centroid_conic, is_precondition_error, theorem10_locus, CheckId, InversionCase, Lemma1Circles,
};
use coaxal_core::{Backend, CheckReport, Exact, ExactPoint, ExactTriangle, GeomError, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::heronian::HeronianGenerator;
use crate::sampling;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_TRIALS: usize = 100;

/// Samples tried per trial before the trial is reported as degenerate.
const MAX_ATTEMPTS: usize = 25;

#[derive(Clone, Debug)]
pub enum TriangleSource {
    Sides([Exact; 3]),
    Heronian(u64),
    RandomFloat,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub check: CheckId,
    pub source: TriangleSource,
    pub backend: Backend,
    pub trials: usize,
    pub seed: u64,
    pub p: Option<ExactPoint>,
    pub q: Option<ExactPoint>,
    pub q_on_conic: Option<Exact>,
    pub k: Option<KParam<Exact>>,
}

impl VerifyConfig {
    pub fn new(check: CheckId, seed: u64) -> Self {
        VerifyConfig {
            check,
            source: TriangleSource::Heronian(seed),
            backend: Backend::Exact,
            trials: DEFAULT_TRIALS,
            seed,
            p: None,
            q: None,
            q_on_conic: None,
            k: None,
        }
    }

    fn explicit_triangle(&self) -> bool {
        matches!(self.source, TriangleSource::Sides(_))
    }

    /// Whether a trial still draws something at random.
    fn has_free_inputs(&self) -> bool {
        let q_fixed = self.q.is_some() || self.q_on_conic.is_some();
        match self.check {
            CheckId::Lemma1 => true,
            CheckId::Lemma2 | CheckId::Lemma3 => self.k.is_none(),
            CheckId::Lemma8 | CheckId::Lemma9 | CheckId::Theorem7 => self.p.is_none(),
            CheckId::Theorem5 | CheckId::PEqualsH => !q_fixed,
            CheckId::Theorem10 => self.p.is_none() || !q_fixed,
            CheckId::Lemma4
            | CheckId::Lemma6
            | CheckId::InversionX56
            | CheckId::InversionX58
            | CheckId::InversionK
            | CheckId::InversionI => false,
        }
    }

    /// Trials actually run: one when nothing varies between trials.
    pub fn effective_trials(&self) -> usize {
        if self.explicit_triangle() && !self.has_free_inputs() {
            1
        } else {
            self.trials.max(1)
        }
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Precondition(GeomError),
    #[error("{0}")]
    Config(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct RunOutput {
    pub schema_version: u32,
    pub check_id: String,
    pub backend: Backend,
    pub seed: u64,
    pub trials: usize,
    pub passed: bool,
    pub reports: Vec<CheckReport>,
}

impl RunOutput {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}

pub fn run(cfg: &VerifyConfig) -> Result<RunOutput, VerifyError> {
    let trials = cfg.effective_trials();
    let pool = match cfg.source {
        TriangleSource::Heronian(seed) => Some(HeronianGenerator::new(seed)),
        _ => None,
    };
    let results: Vec<Result<CheckReport, VerifyError>> =
        (0..trials).into_par_iter().map(|i| run_trial(cfg, pool.as_ref(), trials, i)).collect();
    let reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(RunOutput {
        schema_version: SCHEMA_VERSION,
        check_id: cfg.check.to_string(),
        backend: cfg.backend,
        seed: cfg.seed,
        trials,
        passed: reports.iter().all(|r| r.passed()),
        reports,
    })
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

enum Instance {
    Exact(ExactTriangle),
    Float(TriangleMetric<f64>),
}

fn random_float_triangle<R: Rng>(rng: &mut R) -> TriangleMetric<f64> {
    loop {
        let s: [f64; 3] = [(); 3].map(|_| rng.gen_range(1.0..3.0));
        let scalene = (s[0] - s[1]).abs() > 1e-3 && (s[1] - s[2]).abs() > 1e-3 && (s[0] - s[2]).abs() > 1e-3;
        if let (true, Ok(t)) = (scalene, TriangleMetric::from_sides(s[0], s[1], s[2])) {
            if t.area2().sqrt() > 0.05 {
                return t;
            }
        }
    }
}

fn triangle(
    cfg: &VerifyConfig,
    pool: Option<&HeronianGenerator>,
    trials: usize,
    trial: usize,
    attempt: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Instance, VerifyError> {
    let exact = match &cfg.source {
        TriangleSource::Sides(s) => ExactTriangle::from_sides(s[0].clone(), s[1].clone(), s[2].clone())
            .map_err(VerifyError::Precondition)?,
        TriangleSource::Heronian(_) => {
            let pool = pool.expect("pool built for Heronian source");
            let idx = if attempt == 0 { trial } else { trials + trial * MAX_ATTEMPTS + attempt };
            let s = pool.get(idx);
            ExactTriangle::from_int_sides(s[0], s[1], s[2]).map_err(VerifyError::Precondition)?
        }
        TriangleSource::RandomFloat => return Ok(Instance::Float(random_float_triangle(rng))),
    };
    Ok(match cfg.backend {
        Backend::Exact => Instance::Exact(exact),
        Backend::Float => Instance::Float(exact.cast().map_err(VerifyError::Precondition)?),
    })
}

fn run_trial(
    cfg: &VerifyConfig,
    pool: Option<&HeronianGenerator>,
    trials: usize,
    trial: usize,
) -> Result<CheckReport, VerifyError> {
    let mut rng = trial_rng(cfg.seed, trial);
    let mut notes = Vec::new();
    let mut last_err = None;
    let mut last_triangle = None;
    for attempt in 0..MAX_ATTEMPTS {
        let inst = triangle(cfg, pool, trials, trial, attempt, &mut rng)?;
        let snapshot = rng.clone();
        let (result, sides) = match &inst {
            Instance::Exact(t) => {
                let r = match instance(cfg, t, trial, &mut rng) {
                    Err(GeomError::NotExact(why)) => {
                        let tf: TriangleMetric<f64> = t.cast().map_err(VerifyError::Precondition)?;
                        rng = snapshot;
                        instance(cfg, &tf, trial, &mut rng).map(|mut r| {
                            r.downgrades.push(format!(
                                "{why}: rerun on the float backend at relative tolerance {:e}",
                                float_tolerance()
                            ));
                            r
                        })
                    }
                    other => other,
                };
                (r, t.wire_sides())
            }
            Instance::Float(t) => (instance(cfg, t, trial, &mut rng), t.wire_sides()),
        };
        match result {
            Ok(mut r) => {
                r.notes.extend(notes);
                return Ok(r.with_provenance(cfg.seed, trial));
            }
            Err(e) if is_precondition_error(&e) => {
                if cfg.explicit_triangle() {
                    return Err(VerifyError::Precondition(e));
                }
                notes.push(format!("triangle {sides:?} skipped: {e}"));
                last_err = Some(e);
            }
            Err(e) => {
                if !cfg.has_free_inputs() {
                    last_err = Some(e);
                    last_triangle = Some(inst);
                    break;
                }
                notes.push(format!("sample redrawn: {e}"));
                last_err = Some(e);
            }
        }
        last_triangle = Some(inst);
    }
    let err = last_err.unwrap_or_else(|| GeomError::Degenerate("no usable sample".into()));
    let mut r = match last_triangle {
        Some(Instance::Exact(t)) => degenerate_report(cfg.check, &t, &err),
        Some(Instance::Float(t)) => degenerate_report(cfg.check, &t, &err),
        None => return Err(VerifyError::Precondition(err)),
    };
    r.notes.extend(notes);
    Ok(r.with_provenance(cfg.seed, trial))
}

fn fixed<S: Scalar>(p: &Option<ExactPoint>) -> Option<HPoint<S>> {
    p.as_ref().map(|p| p.cast())
}

fn random_p<S: Scalar>(t: &TriangleMetric<S>, rng: &mut ChaCha8Rng) -> coaxal_core::Result<HPoint<S>> {
    let h = named_center(t, CenterId::H)?;
    sampling::point_off(rng, |p| *p == h)
}

/// Builds the inputs of one trial and runs the check on them.
fn instance<S: Scalar>(
    cfg: &VerifyConfig,
    t: &TriangleMetric<S>,
    trial: usize,
    rng: &mut ChaCha8Rng,
) -> coaxal_core::Result<CheckReport> {
    let p_fixed = fixed::<S>(&cfg.p);
    let q_fixed = fixed::<S>(&cfg.q);
    let k_fixed = cfg.k.as_ref().map(|k| match k {
        KParam::Finite(x) => KParam::Finite(convert::<Exact, S>(x)),
        KParam::Infinity => KParam::Infinity,
    });
    let tau = cfg.q_on_conic.as_ref().map(convert::<Exact, S>);
    if cfg.check.excludes_equilateral() && t.is_equilateral() {
        return Err(GeomError::EquilateralExcluded);
    }
    match cfg.check {
        CheckId::Lemma1 => {
            let p = match p_fixed {
                Some(p) => p,
                None => sampling::point(rng),
            };
            let choice = match trial % 3 {
                0 => Lemma1Circles::Concurrent(q_fixed.unwrap_or_else(|| sampling::point(rng))),
                1 => Lemma1Circles::Free([(); 3].map(|_| sampling::rational(rng))),
                _ => Lemma1Circles::Diameters,
            };
            check_lemma1(t, &p, &choice)
        }
        CheckId::Lemma2 => {
            let k = match k_fixed {
                Some(KParam::Finite(k)) => k,
                Some(KParam::Infinity) => return Err(GeomError::Degenerate("k = ∞ has no similar triangle".into())),
                None => sampling::rational(rng),
            };
            check_lemma2(t, &k)
        }
        CheckId::Lemma3 => {
            let named = [
                KParam::Finite(S::zero()),
                KParam::Finite(S::from_ratio(1, 2)),
                KParam::Finite(S::one()),
                KParam::Infinity,
            ];
            let k = match k_fixed {
                Some(k) => k,
                None if trial < named.len() => named[trial].clone(),
                None => KParam::Finite(sampling::rational(rng)),
            };
            check_lemma3(t, &k)
        }
        CheckId::Lemma4 => check_lemma4(t),
        CheckId::Lemma6 => check_lemma6(t),
        CheckId::Lemma8 | CheckId::Lemma9 => {
            let p = match p_fixed {
                Some(p) => p,
                None => random_p(t, rng)?,
            };
            if cfg.check == CheckId::Lemma8 {
                check_lemma8(t, &p)
            } else {
                check_lemma9(t, &p)
            }
        }
        CheckId::Theorem5 => {
            let conic = incenter_centroid_conic(t)?;
            let q = match (q_fixed, &tau) {
                (Some(q), _) => q,
                (None, Some(tau)) => sampling::on_circumconic_at(&conic, tau)?,
                (None, None) if trial % 2 == 0 => match (trial / 2) % 4 {
                    0 => named_center(t, CenterId::K)?,
                    1 => named_center(t, CenterId::X56)?,
                    2 => named_center(t, CenterId::X58)?,
                    _ => sampling::on_circumconic(rng, &conic)?,
                },
                (None, None) => sampling::point_off(rng, |q| conic.contains(q))?,
            };
            check_theorem5(t, &q)
        }
        CheckId::Theorem7 => {
            let p = match p_fixed {
                Some(p) => p,
                None if t.is_equilateral() => named_center(t, CenterId::G)?,
                None if trial % 2 == 0 => match (trial / 2) % 4 {
                    0 => named_center(t, CenterId::G)?,
                    1 => named_center(t, CenterId::O)?,
                    2 => named_center(t, CenterId::NinePoint)?,
                    _ => sampling::on_euler_line(rng, t)?,
                },
                None => sampling::off_line(rng, &euler_line(&identity_derived(t)?)?)?,
            };
            check_theorem7(t, &p)
        }
        CheckId::Theorem10 => {
            let p = match p_fixed {
                Some(p) => p,
                None if trial % 10 == 9 => sampling::degenerate_theorem10_p(rng, t)?,
                None => random_p(t, rng)?,
            };
            let q = match q_fixed {
                Some(q) => q,
                None => {
                    let loc = theorem10_locus(t, &p)?;
                    if tau.is_some() || trial % 2 == 0 {
                        sampling::on_theorem10_locus(rng, &p, &loc, tau.as_ref())?
                    } else {
                        sampling::point_off(rng, |q| loc.contains(q))?
                    }
                }
            };
            check_theorem10(t, &p, &q)
        }
        CheckId::PEqualsH => {
            let q = match q_fixed {
                Some(q) => q,
                None => sampling::point(rng),
            };
            check_ph_remark(t, &q)
        }
        CheckId::InversionX56 => check_inversion_suite(t, InversionCase::X56),
        CheckId::InversionX58 => check_inversion_suite(t, InversionCase::X58),
        CheckId::InversionK => check_inversion_suite(t, InversionCase::K),
        CheckId::InversionI => check_inversion_suite(t, InversionCase::I),
    }
}
