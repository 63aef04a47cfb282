//! Zero avoidance of Tr(A x^{q-1} + B x^{1-q}) + r over F_{q^3}^*: the
//! closed form against a scan, and the (Tr, N) coverage it rests on.

use planar::criteria::{lemma_trn_surjectivity, prop_ab_bruteforce, prop_ab_criterion};
use planar::sweep::run_propab_sweep;
use planar::{build_field, Result};

fn main() -> Result<()> {
    let ctx = build_field(3, 1, 3)?;
    let cov = lemma_trn_surjectivity(&ctx)?;
    println!("(Tr, N) attains all {} targets: {}", cov.counts.len(), cov.surjective);
    for ((r, s), count) in cov.counts.iter().take(4) {
        println!("  Tr={} N={}: {count}", ctx.display(*r), ctx.display(*s));
    }

    let a = ctx.exp_gen(5);
    let b = ctx.exp_gen(11);
    for r in ctx.subfield_elements(ctx.base_field()) {
        let closed = prop_ab_criterion(&ctx, a, b, r)?;
        let scan = prop_ab_bruteforce(&ctx, a, b, r)?;
        println!("A={} B={} r={}: closed form {closed}, scan {scan}", ctx.display(a), ctx.display(b), ctx.display(r));
    }

    let report = run_propab_sweep(3, 1, 1)?;
    println!("all triples at q=3: {:?}", report.summary);
    Ok(())
}
