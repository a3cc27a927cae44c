//! Runs every consistency check and prints the report as JSON.

use calogero::dunkl::Params;
use calogero::exactpoly::int;
use calogero::oracle::verify_suite;

fn main() -> calogero::Result<()> {
    let params = Params::b_type(int(1), int(1), int(1))?;
    let report = verify_suite(&params, 2, 3);
    for e in &report.entries {
        println!("{:<26} {:?}", e.check, e.status);
    }
    println!("{}", if report.all_pass() { "all checks pass" } else { "some checks failed" });
    Ok(())
}
