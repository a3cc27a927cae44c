//! Orbits of a partition under the symmetric group, with minimal words and
//! the Poincare polynomial of the stabilizer-free case.

use calogero::weyl::{poincare_polynomial, sort_to_partition, weyl_orbit, Partition};

fn main() -> calogero::Result<()> {
    let mu = Partition::new(vec![2, 1, 1, 0])?;
    let orbit = weyl_orbit(&mu);
    println!("orbit of {mu}: {} elements", orbit.len());
    for el in &orbit {
        let (_, w) = sort_to_partition(&el.composition);
        println!("    {:<10} word {:?}", el.composition.to_string(), w.letters());
    }
    for n in 1..=5 {
        println!("W_{n}(t) coefficients {:?}", poincare_polynomial(n)?);
    }
    Ok(())
}
