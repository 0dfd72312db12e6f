//! Finite-difference verification of tape gradients.

use crate::model::Model;
use crate::params::{Grads, ParamId};
use crate::tape::{Tape, Var};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GradcheckOptions {
    /// Central-difference step.
    pub step: f64,
    /// Lower bound on the relative-error denominator, so that gradients
    /// that are zero up to rounding do not dominate.
    pub floor: f64,
    /// Relative error above which an entry counts as a failure.
    pub tolerance: f64,
}

impl Default for GradcheckOptions {
    fn default() -> Self {
        GradcheckOptions { step: 1e-5, floor: 1e-6, tolerance: 1e-4 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GradcheckReport {
    pub checked: usize,
    pub max_rel_err: f64,
    /// Parameter name and flat index of the worst entry.
    pub worst: Option<(String, usize)>,
    pub failures: usize,
}

impl GradcheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn relative_error(analytic: f64, numeric: f64, floor: f64) -> f64 {
    (analytic - numeric).abs() / analytic.abs().max(numeric.abs()).max(floor)
}

fn eval<F>(model: &Model<f64>, loss: &F) -> f64
where
    F: Fn(&Model<f64>, &mut Tape<'_, f64>) -> Var,
{
    let mut tape = Tape::new(&model.params);
    let v = loss(model, &mut tape);
    tape.value(v).data[0]
}

/// Compare the analytic gradient of `loss` against central differences for
/// every entry of every parameter accepted by `filter`.
pub fn check<F>(model: &mut Model<f64>, loss: F, filter: impl Fn(&str) -> bool, opts: GradcheckOptions) -> GradcheckReport
where
    F: Fn(&Model<f64>, &mut Tape<'_, f64>) -> Var,
{
    let mut grads = Grads::zeros_like(&model.params);
    {
        let mut tape = Tape::new(&model.params);
        let v = loss(model, &mut tape);
        tape.backward(v, &mut grads);
    }
    let mut report = GradcheckReport { checked: 0, max_rel_err: 0.0, worst: None, failures: 0 };
    let ids: Vec<ParamId> = model.params.ids().collect();
    for id in ids {
        let name = model.params.name(id).to_string();
        if !filter(&name) {
            continue;
        }
        for i in 0..model.params.get(id).len() {
            let orig = model.params.get(id).data[i];
            model.params.get_mut(id).data[i] = orig + opts.step;
            let up = eval(model, &loss);
            model.params.get_mut(id).data[i] = orig - opts.step;
            let down = eval(model, &loss);
            model.params.get_mut(id).data[i] = orig;
            let numeric = (up - down) / (2.0 * opts.step);
            let err = relative_error(grads.get(id).data[i], numeric, opts.floor);
            report.checked += 1;
            if err > opts.tolerance {
                report.failures += 1;
            }
            if report.worst.is_none() || err > report.max_rel_err {
                report.max_rel_err = err;
                report.worst = Some((name.clone(), i));
            }
        }
    }
    report
}
