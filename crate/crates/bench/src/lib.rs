//! Workloads shared by the criterion benches.

use golden_pascal::{Eigensystem, Report};

/// Runs the full derivation check for every order in `orders`, returning the
/// number of orders that passed.
pub fn verify_orders(orders: impl IntoIterator<Item = usize>) -> usize {
    orders
        .into_iter()
        .filter(|&n| Eigensystem::new(n).map(|s| s.verify()).is_ok_and(|r: Report| r.pass))
        .count()
}

/// Decomposes `R` of order `n` and raises it to `m` through the spectrum.
pub fn spectral_power(n: usize, m: u32) -> usize {
    let d = golden_pascal::spectral_decompose(n).expect("decomposition");
    d.power(m).expect("integral power").order()
}
