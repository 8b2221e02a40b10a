//! Checks every graph up to a given order for r ≤ μ/2 and writes the CSV
//! records to stdout.

use std::io;

use ekr_core::census::graphs_up_to;
use ekr_core::ekr::SearchLimits;
use ekr_core::sweep::sweep_graphs;

fn main() -> io::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(6, |a| a.parse().expect("order must be an integer"));
    let outcome = sweep_graphs(&graphs_up_to(n), SearchLimits::default());
    outcome.write_csv(io::stdout().lock())?;
    eprintln!("{}", outcome.summary());
    Ok(())
}
