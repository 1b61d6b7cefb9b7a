//! Running a verification suite from code and rendering its report.

use affine_schur::suite::{run_suite, Suite, SuiteConfig};

fn main() -> affine_schur::Result<()> {
    let cfg = SuiteConfig::new(Suite::BraidTd).with_rd(3, 2);
    let report = run_suite(&cfg)?;
    print!("{}", report.to_markdown());
    println!("all passed: {}", report.all_passed());
    Ok(())
}
