//! Wicketed diagrams: the series at `x = 1` to a high order, written as
//! b-file lines.

use std::time::Instant;

use umbral_ferrers::oracle::bfile;
use umbral_ferrers::umbral::wicketed_specialized;

fn main() -> umbral_ferrers::Result<()> {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(30);
    let start = Instant::now();
    let psi = wicketed_specialized(order)?;
    let coeffs: Vec<String> = (8..=order)
        .map(|k| psi.scalar_coeff(k).to_string())
        .collect();
    print!("{}", bfile(&coeffs, 8));
    eprintln!("order {order} in {:.2?}", start.elapsed());
    Ok(())
}
