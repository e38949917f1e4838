//! Run reports: the numbers a solve produces, printable as a table or JSON.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub mode: String,
    /// Max pointwise residual norm.
    pub residual_max: f64,
    /// L2 residual norm (0 for analytic single-number checks).
    pub residual_l2: f64,
    /// Relative drift of the conserved norm (solver runs only).
    pub norm_drift: f64,
    /// L2 error against the analytic reference (solver runs only).
    pub l2_error: f64,
    /// Wall time of the computation in seconds.
    pub wall_time_s: f64,
    /// Trajectory file, when one was written.
    pub output_path: Option<String>,
    /// Advisory notices (e.g. the dt <= dx^2 m accuracy guard).
    pub warnings: Vec<String>,
}

impl RunReport {
    pub fn all_finite(&self) -> bool {
        [
            self.residual_max,
            self.residual_l2,
            self.norm_drift,
            self.l2_error,
            self.wall_time_s,
        ]
        .iter()
        .all(|v| v.is_finite())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("mode:          {}\n", self.mode));
        out.push_str(&format!("residual max:  {:.3e}\n", self.residual_max));
        out.push_str(&format!("residual L2:   {:.3e}\n", self.residual_l2));
        out.push_str(&format!("norm drift:    {:.3e}\n", self.norm_drift));
        out.push_str(&format!("L2 error:      {:.3e}\n", self.l2_error));
        out.push_str(&format!("wall time:     {:.3} s\n", self.wall_time_s));
        if let Some(p) = &self.output_path {
            out.push_str(&format!("trajectory:    {p}\n"));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning:       {w}\n"));
        }
        out
    }
}
