//! Enumerate every ideal of an algebra and list its k-Galois LCD codes with
//! their distances and the best-known comparison.
//!
//! Usage: `cargo run --release --example lcd_search [q n lambda [k]]`
//! The table named by `CONSTACYCLIC_BEST_KNOWN` replaces the bundled one.

use constacyclic::discover::{enumerate_ideals, search_lcd, EnumOptions, SearchFilters};
use constacyclic::{AlgebraCtx, BestKnownTable, FieldSpec, Result};

fn main() -> Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (q, n, lambda, k) = match args[..] {
        [q, n, l] => (q, n as usize, l as i64, 0),
        [q, n, l, k] => (q, n as usize, l as i64, k as u32),
        _ => (5, 21, 4, 0),
    };
    let field = FieldSpec::of_order(q, None, constacyclic::gf::DEFAULT_SEED)?;
    let ctx = AlgebraCtx::new(&field, n, field.from_int(lambda))?;
    let table = BestKnownTable::from_env()?;
    let opts = EnumOptions { galois: vec![k], table: Some(table), budget: Some(50_000_000), ..EnumOptions::default() };

    let all = enumerate_ideals(&ctx, EnumOptions { compute_distance: false, ..opts.clone() })?;
    let total = all.lattice().len();
    let lcd_count = all.filter(|r| r.as_ref().is_ok_and(|r| r.lcd_galois[&k])).count();
    println!("{ctx}: {total} ideals, {lcd_count} of them {k}-Galois LCD");

    let found = search_lcd(&ctx, k, &SearchFilters { min_k: Some(1), ..SearchFilters::default() }, opts)?;
    for rec in found.iter().filter(|r| r.k < n) {
        let d = rec.d().map_or("?".to_string(), |d| d.to_string());
        println!("[{n},{},{d}]_{q}  mask {:#07b}  {}  e = {}", rec.k, rec.subset_mask, rec.verdict, rec.idempotent);
    }
    Ok(())
}
