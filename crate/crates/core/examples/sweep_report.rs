//! A sampled cubic sweep at q=5 written as CSV and JSON, and the
//! exhaustive monomial sweep at n=4.

use planar::criteria::Family;
use planar::sweep::{emit_report, render_report, run_sweep, Mode, OracleChoice, ReportFormat, SweepSpec};
use planar::Result;

fn main() -> Result<()> {
    let mut spec = SweepSpec::new(5, 1, 3, Family::Cubic2);
    spec.mode = Mode::Sample { count: 2000, seed: 7 };
    spec.oracle = OracleChoice::Both;
    spec.workers = 2;
    let report = run_sweep(&spec)?;

    let csv = render_report(&report, ReportFormat::Csv)?;
    for line in csv.lines().take(4) {
        println!("{line}");
    }
    for line in csv.lines().filter(|l| l.starts_with('#')) {
        println!("{line}");
    }

    let path = std::env::temp_dir().join("planar-cubic2-q5.json");
    emit_report(&report, ReportFormat::Json, &path)?;
    println!("json written to {}", path.display());

    let monomial = run_sweep(&SweepSpec::new(3, 1, 4, Family::Monomial))?;
    for row in monomial.rows.iter().flatten() {
        println!("{} {} {}", row.a, row.criterion, row.oracle);
    }
    Ok(())
}
