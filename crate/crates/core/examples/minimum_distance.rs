//! Certified minimum distances: exhaustive enumeration for small codes,
//! information-set enumeration with a per-level ledger for larger ones, and
//! partial bounds when a budget runs out.

use constacyclic::codes::{ideal_from_element, min_distance, min_distance_with, Method};
use constacyclic::{AlgebraCtx, Error, FieldSpec, Result};

fn main() -> Result<()> {
    let f7 = FieldSpec::prime(7)?;
    let ctx = AlgebraCtx::new(&f7, 19, f7.from_int(6))?;
    let f = ctx.parse(
        "4g^18 + g^17 + 6g^16 + 2g^15 + 6g^14 + 2g^13 + 4g^12 + 3g^11 + 5g^10 + 2g^9 + 4g^8 + 3g^7 + 5g^6 + g^5 \
         + 5g^4 + g^3 + 6g^2 + 3g + 1",
    )?;
    let code = ideal_from_element(&ctx, &f);
    let start = std::time::Instant::now();
    let cert = min_distance(&code, None)?;
    println!("[19,{},{}]_7 by {} in {:.2?}", code.k(), cert.d, cert.method, start.elapsed());
    for level in &cert.levels {
        println!("  message weight {:>2}: {:>8} messages, best so far {}", level.w, level.messages, level.best);
    }
    println!("  witness {:?}", cert.witness.iter().map(|c| c.index()).collect::<Vec<_>>());
    assert!(cert.verify(&code));

    let small = ideal_from_element(&ctx, &ctx.one().sub(&f)?);
    let a = min_distance_with(&small, Method::Exhaustive, None)?;
    let b = min_distance_with(&small, Method::InfoSet, None)?;
    println!(
        "[19,{}]_7: exhaustive d = {} ({} messages), info-set d = {} ({} messages)",
        small.k(),
        a.d,
        a.work,
        b.d,
        b.work
    );

    match min_distance(&code, Some(500)) {
        Err(Error::BudgetExceeded(bounds)) => println!("with a 500-message budget: {bounds}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
