//! Arithmetic in GF(p) and GF(p^m), the Frobenius map, and the classes of
//! `F_q^* / (F_q^*)^n`.

use constacyclic::gf::gcd;
use constacyclic::{FieldSpec, Result};

fn main() -> Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let (a, b) = (f7.from_int(3), f7.from_int(5));
    println!(
        "GF(7): 3 + 5 = {}, 3 * 5 = {}, 3^-1 = {}",
        f7.format(f7.add(a, b)),
        f7.format(f7.mul(a, b)),
        f7.format(f7.inv(a)?)
    );

    // GF(9) with the modulus found by the seeded search
    let f9 = FieldSpec::of_order(9, None, constacyclic::gf::DEFAULT_SEED)?;
    println!("GF(9) modulus (little-endian): {:?}", f9.modulus());
    for x in f9.units().take(4) {
        println!(
            "  x = {:<6} order {}  x^3 = {:<6} coords {:?}",
            f9.format(x),
            f9.order(x)?,
            f9.format(f9.frobenius(x, 1)),
            f9.coords(x)
        );
    }

    // an explicit modulus: GF(4) = GF(2)[a]/(a^2 + a + 1)
    let f4 = FieldSpec::new(2, 2, Some(&[1, 1, 1]))?;
    let a = f4.from_coords(&[0, 1])?;
    println!("GF(4): a^2 = {}, a^3 = {}", f4.format(f4.mul(a, a)), f4.format(f4.pow_u64(a, 3)));

    for (q, n) in [(3u64, 10u64), (7, 3), (9, 4), (5, 21)] {
        let f = FieldSpec::of_order(q, None, constacyclic::gf::DEFAULT_SEED)?;
        let classes = f.norm_image_classes(n);
        let reps: Vec<String> = classes.representatives.iter().map(|&x| f.format(x)).collect();
        println!(
            "q={q:<2} n={n:<2} classes={} (gcd = {})  representatives {}",
            classes.count,
            gcd(n, q - 1),
            reps.join(" ")
        );
    }
    Ok(())
}
