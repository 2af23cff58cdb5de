//! Exact counts behind the second-moment argument and the inequalities
//! they satisfy.
//!
//!     cargo run --release --example counting_lemmas

use symgen::counting::{
    bounded_cycle_bound_check, count_bounded_cycles, count_nu_roots, divisor_count,
    frak_c_density_bound_check, frak_c_size, frak_m_size, k_of_n, k_of_n_lower_bound, pi_n,
};
use symgen::exact::factorial;

fn main() -> symgen::Result<()> {
    println!("  n   Π_n            |𝔠|/n!      |𝔐|/n!");
    for n in [9, 12, 14, 19, 24, 30] {
        let f = factorial(n);
        let ratio = |x: num_bigint::BigUint| {
            use num_traits::ToPrimitive;
            x.to_f64().unwrap() / f.to_f64().unwrap()
        };
        println!(
            "{n:>3}   {:<12}  {:.6}    {:.6}",
            format!("{:?}", pi_n(n).primes),
            ratio(frak_c_size(n)),
            ratio(frak_m_size(n)?)
        );
    }

    println!("\npermutations of 12 points by maximal cycle length r:");
    for r in [1, 2, 3, 4, 6, 12] {
        println!("  r = {r:>2}: {}", count_bounded_cycles(12, r));
    }
    let rows = bounded_cycle_bound_check(40);
    println!("bound (2r/m)^(m/2r)·m! holds on {} of {} (m, r) pairs", rows.iter().filter(|r| r.pass).count(), rows.len());

    println!("\n#{{σ ∈ S_12 : σ^ν = 1}} and d(ν):");
    for nu in [1u64, 2, 6, 12, 60, 27720] {
        println!("  ν = {nu:>5}: {:>10}   d = {}", count_nu_roots(12, nu), divisor_count(nu));
    }

    for (n, big_n) in [(5, 25), (7, 49), (9, 81)] {
        let row = k_of_n_lower_bound(n, big_n);
        println!("k(N) for n = {n}, N = {big_n}: {} >= {}", k_of_n(n, big_n), row.bound);
    }

    let density = frak_c_density_bound_check(2000);
    let passing = density.rows.iter().filter(|r| r.pass).count();
    println!(
        "\nΣ_(p ∈ Π_n) 1/p >= 1/(2 ln n) holds at {passing} of {} degrees up to 2000",
        density.rows.len()
    );
    Ok(())
}
