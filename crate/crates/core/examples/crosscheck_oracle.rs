//! Brute-force counts against series coefficients, totals and refined.

use umbral_ferrers::crosscheck::crosscheck;

fn main() -> umbral_ferrers::Result<()> {
    let max_hp: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(13);
    let c = crosscheck(max_hp)?;
    for r in c.totals.iter().filter(|r| r.expected != 0u8.into()) {
        println!(
            "{:9} {:3} {:>8} {}",
            r.kind,
            r.hp,
            r.got,
            if r.ok() { "ok" } else { "MISMATCH" }
        );
    }
    println!("{} refined coefficients compared", c.refined.len());
    match c.first_mismatch() {
        Some(m) => println!("first mismatch: {m}"),
        None => println!("all agree through h = {max_hp}"),
    }
    Ok(())
}
