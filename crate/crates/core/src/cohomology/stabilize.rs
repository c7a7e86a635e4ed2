use super::{CohomologyError, Window};

/// How a window is enlarged between attempts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GrowthPolicy {
    pub dz: i64,
    pub du: u32,
    pub max_steps: usize,
}

impl Default for GrowthPolicy {
    fn default() -> Self {
        GrowthPolicy { dz: 2, du: 1, max_steps: 8 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stabilized {
    pub value: i64,
    /// First window of the stable run.
    pub window: Window,
    pub stabilized: bool,
}

/// Grows `w0` until `compute` returns the same value on a window and its next
/// two enlargements.
pub fn stabilize_window<F>(mut compute: F, w0: Window, policy: GrowthPolicy) -> Result<Stabilized, CohomologyError>
where
    F: FnMut(Window) -> Result<i64, CohomologyError>,
{
    let mut windows = vec![w0];
    let mut values = vec![compute(w0)?];
    for _ in 0..policy.max_steps {
        let w = windows.last().unwrap().grow(policy.dz, policy.du);
        values.push(compute(w)?);
        windows.push(w);
        let n = values.len();
        if n >= 3 && values[n - 1] == values[n - 2] && values[n - 2] == values[n - 3] {
            return Ok(Stabilized { value: values[n - 3], window: windows[n - 3], stabilized: true });
        }
    }
    Err(CohomologyError::StepCapExceeded {
        last: *values.last().unwrap(),
        window: *windows.last().unwrap(),
        steps: policy.max_steps,
    })
}
