//! Multi-controlled NOT lowering onto Toffoli ladders.

use crate::circuit::Gate;
use crate::error::{Error, Result};

/// Lowers `MCN(controls) -> target` onto NOT/CNOT/Toffoli gates.
///
/// With `c >= 3` controls the ladder ANDs the controls pairwise into
/// `c - 2` scratch lines, fires the target from the last partial product,
/// then uncomputes the scratch: `2c - 3` Toffolis in total. Scratch lines
/// must be 0 on entry and are 0 again on exit.
pub fn lower_mcn(controls: &[usize], target: usize, scratch: &[usize]) -> Result<Vec<Gate>> {
    let c = controls.len();
    match c {
        0 => Err(Error::InvalidGate("MCN without controls".into())),
        1 => Ok(vec![Gate::Cnot { control: controls[0], target }]),
        2 => Ok(vec![Gate::Toffoli { controls: [controls[0], controls[1]], target }]),
        _ => {
            if scratch.len() < c - 2 {
                return Err(Error::InsufficientScratch { controls: c, required: c - 2, available: scratch.len() });
            }
            let mut compute = Vec::with_capacity(c - 2);
            compute.push(Gate::Toffoli { controls: [controls[0], controls[1]], target: scratch[0] });
            for i in 1..c - 2 {
                compute.push(Gate::Toffoli { controls: [scratch[i - 1], controls[i + 1]], target: scratch[i] });
            }
            let mut gates = compute.clone();
            gates.push(Gate::Toffoli { controls: [scratch[c - 3], controls[c - 1]], target });
            gates.extend(compute.into_iter().rev());
            Ok(gates)
        }
    }
}

/// Irreversible lowering for a target known to be 0: ladder over all but
/// the last control, then clear the target when the last control is 0.
/// Needs one scratch line fewer than [`lower_mcn`].
pub fn lower_mcn_into_clear_target(controls: &[usize], target: usize, scratch: &[usize]) -> Result<Vec<Gate>> {
    let Some((&last, head)) = controls.split_last() else {
        return Err(Error::InvalidGate("MCN without controls".into()));
    };
    if head.is_empty() {
        return lower_mcn(controls, target, scratch);
    }
    let mut gates = lower_mcn(head, target, scratch).map_err(|err| match err {
        Error::InsufficientScratch { required, available, .. } => {
            Error::InsufficientScratch { controls: controls.len(), required, available }
        }
        other => other,
    })?;
    gates.extend([Gate::Not { target: last }, Gate::CReset { control: last, target }, Gate::Not { target: last }]);
    Ok(gates)
}
