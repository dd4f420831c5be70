//! Acceptance criteria, one line per criterion. Runs with a plain `main`
//! so every verdict is printed even when all of them pass.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use constacyclic::codes::{
    check_idempotent_lcd, dual, ideal_from_element, is_lambda_constacyclic, is_lcd, min_distance_with, Method,
};
use constacyclic::discover::{
    corollary_applies, enumerate_ideals, search_lcd, EnumOptions, IdealLattice, SearchFilters,
};
use constacyclic::gf::{gcd, prime_power, DEFAULT_SEED};
use constacyclic::talg::{apply_isometry, equivalence_witness};
use constacyclic::{AlgElem, AlgebraCtx, FieldElem, FieldSpec, Poly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Debug>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|err| format!("{err:?}"))
}

struct Example {
    q: u32,
    n: usize,
    lambda: i64,
    e: &'static str,
}

const EX1: Example = Example { q: 3, n: 10, lambda: 2, e: "g^8 + 2g^6 + g^4 + 2g^2 + 2" };
const EX2: Example = Example { q: 5, n: 9, lambda: 4, e: "g^8 + 4g^7 + 3g^6 + 4g^5 + g^4 + 2g^3 + g^2 + 4g + 3" };
const EX3: Example = Example {
    q: 5,
    n: 21,
    lambda: 4,
    e: "4g^19 + 4g^18 + g^15 + 2g^14 + 4g^13 + 4g^12 + 4g^11 + g^10 + g^9 + g^8 + 3g^7 + 4g^6 + g^3 + g^2 + 1",
};
const EX4: Example = Example {
    q: 7,
    n: 19,
    lambda: 6,
    e: "3g^18 + 6g^17 + g^16 + 5g^15 + g^14 + 5g^13 + 3g^12 + 4g^11 + 2g^10 + 5g^9 + 3g^8 + 4g^7 + 2g^6 + 6g^5 \
        + 2g^4 + 6g^3 + g^2 + 4g",
};

fn build(ex: &Example) -> Result<(AlgebraCtx, AlgElem, AlgElem), String> {
    let f = e(FieldSpec::prime(ex.q))?;
    let ctx = e(AlgebraCtx::new(&f, ex.n, f.from_int(ex.lambda)))?;
    let el = e(ctx.parse(ex.e))?;
    let one_minus = e(ctx.one().sub(&el))?;
    Ok((ctx, el, one_minus))
}

/// `(k, d, lcd)` for `⟨a⟩`, with the distance computed by `method`.
fn params(ctx: &AlgebraCtx, a: &AlgElem, method: Method) -> Result<(usize, usize, bool, u64), String> {
    let code = ideal_from_element(ctx, a);
    let cert = e(min_distance_with(&code, method, None))?;
    ensure(cert.verify(&code), || "certificate does not verify".into())?;
    Ok((code.k(), cert.d, e(is_lcd(&code, 0))?, cert.work))
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn ac1() -> Verdict {
    let start = Instant::now();
    let (ctx, el, f) = build(&EX1)?;
    ensure(el.is_idempotent() && e(el.star())? == el, || "e is not a self-adjoint idempotent".into())?;
    let pe = params(&ctx, &el, Method::Exhaustive)?;
    let pf = params(&ctx, &f, Method::Exhaustive)?;
    ensure(pe.3 > 0 && (pe.0, pe.1, pe.2) == (8, 2, true), || format!("<e>: (k, d, lcd) = {:?}", (pe.0, pe.1, pe.2)))?;
    ensure((pf.0, pf.1) == (2, 5), || format!("<1 - e>: (k, d) = {:?}", (pf.0, pf.1)))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("[10,8,2] LCD and [10,2,5] over GF(3) in {:.2?}", start.elapsed()))
}

fn ac2() -> Verdict {
    let start = Instant::now();
    let (ctx, el, f) = build(&EX2)?;
    ensure(el.is_idempotent() && e(el.star())? == el, || "e is not a self-adjoint idempotent".into())?;
    ensure(e(f.star())? == f, || "f* != f".into())?;
    let pe = params(&ctx, &el, Method::Exhaustive)?;
    let pf = params(&ctx, &f, Method::Exhaustive)?;
    ensure(pe.2 && pf.2, || "not both LCD".into())?;
    let found: BTreeSet<_> = [(pe.0, pe.1), (pf.0, pf.1)].into();
    ensure(found == [(7, 2), (2, 6)].into(), || format!("found {found:?}"))?;
    within(start, Duration::from_secs(1))?;
    // the published text pairs (7, 2) with e; the printed e generates the
    // 2-dimensional ideal, so only the unordered pair is checked here
    Ok(format!(
        "[9,7,2] and [9,2,6] over GF(5), both LCD; printed e gives {:?}, 1 - e gives {:?}; {:.2?}",
        (pe.0, pe.1),
        (pf.0, pf.1),
        start.elapsed()
    ))
}

fn ac3() -> Verdict {
    let start = Instant::now();
    let (ctx, el, f) = build(&EX3)?;
    let pe = params(&ctx, &el, Method::Exhaustive)?;
    let pf = params(&ctx, &f, Method::InfoSet)?;
    ensure((pe.0, pe.1, pe.2) == (6, 12, true), || format!("<e>: {pe:?}"))?;
    ensure((pf.0, pf.1, pf.2) == (15, 3, true), || format!("<f>: {pf:?}"))?;
    ensure(pe.3 == (5u64.pow(6) - 1) / 4, || format!("exhaustive covered {} projective messages", pe.3))?;
    ensure(pf.3 <= 3500, || format!("info-set used {} messages", pf.3))?;
    within(start, Duration::from_secs(5))?;
    Ok(format!(
        "[21,6,12] exhaustive over {} messages, [21,15,3] info-set over {} messages; {:.2?}",
        pe.3,
        pf.3,
        start.elapsed()
    ))
}

fn ac4() -> Verdict {
    let start = Instant::now();
    let pool = e(rayon::ThreadPoolBuilder::new().num_threads(1).build())?;
    pool.install(|| {
        let (ctx, el, f) = build(&EX4)?;
        let pe = params(&ctx, &el, Method::Exhaustive)?;
        let code = ideal_from_element(&ctx, &f);
        let cert = e(min_distance_with(&code, Method::InfoSet, None))?;
        ensure((pe.0, pe.1, pe.2) == (7, 10, true), || format!("<e>: {pe:?}"))?;
        ensure(pe.3 == (7u64.pow(7) - 1) / 6, || format!("exhaustive covered {} projective messages", pe.3))?;
        ensure(code.k() == 12 && cert.d == 6 && cert.verify(&code) && e(is_lcd(&code, 0))?, || {
            format!("<f>: k = {}, d = {}", code.k(), cert.d)
        })?;
        let top = cert.levels.last().map_or(0, |l| l.w);
        ensure(top == 5, || format!("info-set stopped at message weight {top}"))?;
        within(start, Duration::from_secs(120))?;
        Ok(format!(
            "[19,7,10] exhaustive over {} messages, [19,12,6] info-set to weight {top} over {} messages; single thread {:.2?}",
            pe.3,
            cert.work,
            start.elapsed()
        ))
    })
}

fn ac5() -> Verdict {
    let mut found = 0;
    for ex in [&EX1, &EX2, &EX3, &EX4] {
        let (ctx, el, f) = build(ex)?;
        let opts = EnumOptions { galois: vec![0], compute_distance: false, ..EnumOptions::default() };
        let all: Vec<_> = e(e(enumerate_ideals(&ctx, opts.clone()))?.collect::<Result<Vec<_>, _>>())?;
        let lattice = e(IdealLattice::new(&ctx))?;
        ensure(all.len() as u64 == lattice.len(), || "enumeration is not exhaustive".into())?;
        let lcd = e(search_lcd(&ctx, 0, &SearchFilters::default(), opts))?;
        for target in [&el, &f] {
            let hits = all.iter().filter(|r| r.idempotent == *target).count();
            ensure(hits == 1, || format!("q={} n={}: {hits} enumerated records match {target}", ex.q, ex.n))?;
            ensure(lcd.iter().any(|r| r.idempotent == *target), || {
                format!("q={} n={}: LCD search misses {target}", ex.q, ex.n)
            })?;
            found += 1;
        }
    }
    Ok(format!("{found}/8 published idempotents rediscovered, each exactly once"))
}

fn ac6() -> Verdict {
    let ctxs = common::matrix(true);
    let results: Vec<Result<(usize, Vec<String>), String>> = ctxs
        .par_iter()
        .map(|ctx| {
            let lattice = e(IdealLattice::new(ctx))?;
            let (mut compared, mut disagreements) = (0, Vec::new());
            for mask in 0..lattice.len() {
                let el = lattice.idempotent(mask);
                let code = ideal_from_element(ctx, &el);
                for k in 0..ctx.field().m() {
                    compared += 1;
                    let (a, b) = (e(is_lcd(&code, k))?, e(check_idempotent_lcd(&el, k))?);
                    if a != b {
                        disagreements.push(format!("{ctx} mask {mask:#b} k={k}: subspace {a}, idempotent {b}"));
                    }
                }
            }
            Ok((compared, disagreements))
        })
        .collect();
    let mut compared = 0;
    let mut bad = Vec::new();
    for r in results {
        let (c, d) = r?;
        compared += c;
        bad.extend(d);
    }
    ensure(bad.is_empty(), || format!("{} disagreements, first: {}", bad.len(), bad[0]))?;
    Ok(format!("{} algebras, {compared} (ideal, k) pairs, zero disagreements", ctxs.len()))
}

/// Runs `check` on every ideal of every matrix algebra, in parallel.
fn sweep(
    check: impl Fn(&AlgebraCtx, &IdealLattice, u64) -> Result<usize, String> + Sync,
) -> Result<(usize, usize), String> {
    let ctxs = common::matrix(false);
    let counts = ctxs
        .par_iter()
        .map(|ctx| {
            let lattice = e(IdealLattice::new(ctx))?;
            (0..lattice.len()).map(|mask| check(ctx, &lattice, mask)).sum::<Result<usize, String>>()
        })
        .collect::<Result<Vec<usize>, String>>()?;
    Ok((ctxs.len(), counts.iter().sum()))
}

fn ac7() -> Verdict {
    let (ctxs, checked) = sweep(|ctx, lattice, mask| {
        let f = ctx.field();
        let code = ideal_from_element(ctx, &lattice.idempotent(mask));
        for k in 0..f.m() {
            let d = e(dual(&code, k))?;
            let constant = e(f.inv(f.frobenius(ctx.lambda(), f.m() - k)))?;
            ensure(e(is_lambda_constacyclic(&d, constant))?, || {
                format!("{ctx} mask {mask:#b} k={k}: dual not constacyclic")
            })?;
            ensure(code.k() + d.k() == ctx.n(), || format!("{ctx} mask {mask:#b} k={k}: dimensions do not add up"))?;
        }
        Ok(f.m() as usize)
    })?;
    Ok(format!("{ctxs} algebras, {checked} (ideal, k) duals, zero violations"))
}

fn ac8() -> Verdict {
    let (ctxs, applicable) = sweep(|ctx, lattice, mask| {
        let f = ctx.field();
        let mut n = 0;
        for k in (0..f.m()).filter(|&k| corollary_applies(f, ctx.lambda(), k)) {
            let code = ideal_from_element(ctx, &lattice.idempotent(mask));
            ensure(e(is_lcd(&code, k))?, || format!("{ctx} mask {mask:#b} k={k}: not LCD"))?;
            n += 1;
        }
        Ok(n)
    })?;
    ensure(applicable > 0, || "the matrix exercised no case".into())?;
    Ok(format!("{ctxs} algebras, {applicable} (ideal, k) pairs with λ^(1+p^(m-k)) != 1, all LCD"))
}

fn ac9() -> Verdict {
    let qs: Vec<u64> = (2..=49).filter(|&q| prime_power(q).is_some()).collect();
    let results = qs
        .par_iter()
        .map(|&q| {
            let f = e(FieldSpec::of_order(q, None, DEFAULT_SEED))?;
            let mut rng = ChaCha8Rng::seed_from_u64(q);
            let units: Vec<FieldElem> = f.units().collect();
            let mut isometries = 0;
            for n in 1..=30usize {
                let classes = f.norm_image_classes(n as u64);
                ensure(classes.count as u64 == gcd(n as u64, q - 1), || {
                    format!("q={q} n={n}: {} classes", classes.count)
                })?;
                let image: BTreeSet<u32> = classes.image.iter().map(|x| x.index()).collect();
                for &lambda in &units {
                    let source = e(AlgebraCtx::new(&f, n, lambda))?;
                    let mut equivalent = Vec::new();
                    for &beta in &units {
                        let w = e(equivalence_witness(&f, n, lambda, beta))?;
                        let in_image = image.contains(&e(f.div(lambda, beta))?.index());
                        ensure(w.is_some() == in_image, || format!("q={q} n={n}: witness/image mismatch"))?;
                        if let Some(w) = w {
                            equivalent.push((beta, w));
                        }
                    }
                    let (beta, w) = equivalent[rng.gen_range(0..equivalent.len())];
                    let target = e(AlgebraCtx::new(&f, n, beta))?;
                    for _ in 0..100 {
                        let a = common::random_elem(&source, &mut rng);
                        let b = e(apply_isometry(&a, w, &target))?;
                        ensure(a.weight() == b.weight(), || format!("q={q} n={n}: weight changed"))?;
                        isometries += 1;
                    }
                }
            }
            Ok(isometries)
        })
        .collect::<Result<Vec<usize>, String>>()?;
    Ok(format!(
        "{} fields × n ≤ 30: class counts equal gcd(n, q-1); {} isometry images keep their weight",
        qs.len(),
        results.iter().sum::<usize>()
    ))
}

fn ac10() -> Verdict {
    let (ctxs, checked) = sweep(|ctx, lattice, mask| {
        let code = ideal_from_element(ctx, &lattice.idempotent(mask));
        if code.k() == 0 || (ctx.field().q() as f64).powi(code.k() as i32) > 1e5 {
            return Ok(0);
        }
        let a = e(min_distance_with(&code, Method::Exhaustive, None))?;
        let b = e(min_distance_with(&code, Method::InfoSet, None))?;
        ensure(a.d == b.d, || format!("{ctx} mask {mask:#b}: exhaustive {} vs info-set {}", a.d, b.d))?;
        ensure(a.verify(&code) && b.verify(&code), || format!("{ctx} mask {mask:#b}: bad witness"))?;
        Ok(1)
    })?;
    Ok(format!("{ctxs} algebras, {checked} codes with q^k ≤ 1e5, both methods agree"))
}

fn ac11() -> Verdict {
    let mut ctxs = Vec::new();
    for q in common::MATRIX_Q {
        let f = common::field(q);
        for n in 1..=20 {
            for lambda in f.units() {
                ctxs.push(e(AlgebraCtx::new(&f, n, lambda))?);
            }
        }
    }
    let counts = ctxs
        .par_iter()
        .enumerate()
        .map(|(i, ctx)| {
            let f = ctx.field();
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            let table = ctx.cocycle_table();
            ensure(table.first_violation().is_none(), || format!("{ctx}: cocycle identity fails"))?;
            let g = e(ctx.from_poly(&Poly::x(f)))?;
            let gn = (0..ctx.n()).try_fold(ctx.one(), |acc, _| acc.mul(&g));
            ensure(e(gn)? == ctx.one().scale(ctx.lambda()), || format!("{ctx}: g^n != λ"))?;
            for _ in 0..1000 {
                let (a, b, c) = (
                    common::random_elem(ctx, &mut rng),
                    common::random_elem(ctx, &mut rng),
                    common::random_elem(ctx, &mut rng),
                );
                let ab = e(a.mul(&b))?;
                ensure(e(ab.mul(&c))? == e(a.mul(&e(b.mul(&c))?))?, || format!("{ctx}: not associative"))?;
                ensure(ab == e(b.mul(&a))?, || format!("{ctx}: not commutative"))?;
                if ctx.has_involution() {
                    let (sa, sb) = (e(a.star())?, e(b.star())?);
                    ensure(e(sa.star())? == a, || format!("{ctx}: a** != a"))?;
                    ensure(e(ab.star())? == e(sb.mul(&sa))?, || format!("{ctx}: (ab)* != b* a*"))?;
                    ensure(e(e(a.add(&b))?.star())? == e(sa.add(&sb))?, || format!("{ctx}: * not additive"))?;
                    for k in 0..f.m() {
                        let lhs = e(a.mul(&e(b.frobenius_twist(k).star())?))?.coeff_identity();
                        ensure(lhs == e(a.k_galois_form(&b, k))?, || format!("{ctx}: form identity fails for k={k}"))?;
                    }
                }
            }
            Ok(usize::from(ctx.has_involution()))
        })
        .collect::<Result<Vec<usize>, String>>()?;
    Ok(format!(
        "{} algebras (n ≤ 20) × 1000 random triples; involution and form identity on the {} with λ^2 = 1",
        ctxs.len(),
        counts.iter().sum::<usize>()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("example 1 reproduction", ac1),
        ("example 2 reproduction", ac2),
        ("example 3 reproduction", ac3),
        ("example 4 reproduction", ac4),
        ("search rediscovery", ac5),
        ("LCD criterion equivalence sweep", ac6),
        ("dual constant", ac7),
        ("corollary fast path", ac8),
        ("equivalence and H^2", ac9),
        ("distance oracle equivalence", ac10),
        ("algebra laws", ac11),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let t = start.elapsed();
        match verdict {
            Ok(detail) => println!("AC{:<2} PASS  {name}: {detail} [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("AC{:<2} FAIL  {name}: {why} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
