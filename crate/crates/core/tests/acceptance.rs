//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::process::ExitCode;
use std::time::Instant;

use planar::criteria::{self, Family};
use planar::dopoly::{
    bent_check, char_sum, gram_matrix, is_planar_bruteforce, is_planar_quadform,
    linearized_square_decompose, quartic_square_equiv_probe, square_equiv_scan,
};
use planar::sweep::{render_report, run_propab_sweep, run_sweep, ReportFormat, SweepSpec};
use planar::{build_field, DoPoly, FieldCtx, FieldElem, LinearizedPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn pq(q: u32) -> (u32, u32) {
    match q {
        9 => (3, 2),
        _ => (q, 1),
    }
}

fn cubic_iff(family: Family) -> Check {
    let mut notes = Vec::new();
    for q in [3, 5, 7, 9] {
        let (p, m) = pq(q);
        let mut spec = SweepSpec::new(p, m, 3, family.clone());
        spec.counts_only = true;
        let r = run_sweep(&spec).map_err(|e| e.to_string())?;
        let units = (q as u64).pow(3) - 1;
        ensure(r.summary.examined == units * units, || format!("q={q}: examined {}", r.summary.examined))?;
        ensure(r.summary.mismatches == 0, || format!("q={q}: {} mismatches", r.summary.mismatches))?;
        ensure(r.summary.planar == r.summary.criterion_satisfied, || format!("q={q}: planar count differs"))?;
        notes.push(format!("q={q}: {} planar", r.summary.planar));
    }
    Ok(notes.join(", "))
}

fn quartic_sufficiency() -> Check {
    let mut notes = Vec::new();
    for p in [3, 5] {
        let mut spec = SweepSpec::new(p, 1, 4, Family::Quartic);
        spec.counts_only = true;
        let r = run_sweep(&spec).map_err(|e| e.to_string())?;
        ensure(r.summary.mismatches == 0, || format!("q={p}: {} sufficiency violations", r.summary.mismatches))?;
        ensure(r.summary.criterion_satisfied > 0, || format!("q={p}: no satisfying pair"))?;
        notes.push(format!("q={p}: {} satisfying, all planar", r.summary.criterion_satisfied));
    }
    let mut spec = SweepSpec::new(3, 1, 4, Family::Quartic);
    spec.full_oracle = true;
    spec.counts_only = true;
    let r = run_sweep(&spec).map_err(|e| e.to_string())?;
    ensure(r.summary.mismatches == 0, || "q=3 full oracle: violations".into())?;
    notes.push(format!(
        "q=3 full oracle: {} planar, {} outside the conditions",
        r.summary.planar, r.summary.uncovered_planar
    ));
    Ok(notes.join(", "))
}

fn prop_ab() -> Check {
    let mut notes = Vec::new();
    for q in [3, 5, 7] {
        let r = run_propab_sweep(q, 1, 1).map_err(|e| e.to_string())?;
        let units = (q as u64).pow(3) - 1;
        ensure(r.summary.examined == units * units * q as u64, || format!("q={q}: examined {}", r.summary.examined))?;
        ensure(r.summary.mismatches == 0, || format!("q={q}: {} mismatches", r.summary.mismatches))?;
        notes.push(format!("q={q}: {} triples", r.summary.examined));
    }
    Ok(notes.join(", "))
}

fn lemma_three_way(ctx: &FieldCtx, a: FieldElem, b: FieldElem) -> Result<(), String> {
    let f = DoPoly::from_terms(ctx, &[(1, 0, a), (0, 0, b)]).map_err(|e| e.to_string())?;
    let formula = criteria::lemma_nondeg(ctx, a, b).map_err(|e| e.to_string())?;
    let gram = gram_matrix(ctx, &f, ctx.one()).map_err(|e| e.to_string())?.is_nondegenerate(ctx);
    let cyc = char_sum(ctx, &f, ctx.zero()).norm_sq().equals_integer(ctx.order() as i64);
    ensure(formula == gram && gram == cyc, || {
        format!("q={} n={} a={} b={}: {formula}/{gram}/{cyc}", ctx.q(), ctx.n(), ctx.display(a), ctx.display(b))
    })
}

fn lemma_nondeg() -> Check {
    let mut checked = 0;
    for n in [2, 3] {
        let ctx = build_field(3, 1, n).map_err(|e| e.to_string())?;
        for a in ctx.elements().skip(1) {
            for b in ctx.elements().skip(1) {
                lemma_three_way(&ctx, a, b)?;
                checked += 1;
            }
        }
        let ctx = build_field(5, 1, n).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + n as u64);
        for _ in 0..250 {
            let a = ctx.exp_gen(rng.random_range(0..ctx.order() - 1));
            let b = ctx.exp_gen(rng.random_range(0..ctx.order() - 1));
            lemma_three_way(&ctx, a, b)?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (a,b) agree three ways"))
}

fn trn() -> Check {
    let mut notes = Vec::new();
    for q in [3, 5, 7, 9] {
        let (p, m) = pq(q);
        let ctx = build_field(p, m, 3).map_err(|e| e.to_string())?;
        let cov = criteria::lemma_trn_surjectivity(&ctx).map_err(|e| e.to_string())?;
        let targets = (q * (q - 1)) as usize;
        ensure(cov.counts.len() == targets, || format!("q={q}: {} targets", cov.counts.len()))?;
        ensure(cov.surjective, || format!("q={q}: not surjective"))?;
        notes.push(format!("q={q}: {targets}/{targets}"));
    }
    Ok(notes.join(", "))
}

fn oracle_consistency() -> Check {
    let mut notes = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [2, 3, 4] {
        let ctx = build_field(3, 1, n).map_err(|e| e.to_string())?;
        let mut planar = 0;
        for _ in 0..100 {
            let f = DoPoly::random(&ctx, &mut rng);
            let bf = is_planar_bruteforce(&ctx, &f).planar;
            let qf = is_planar_quadform(&ctx, &f).planar;
            ensure(bf == qf, || format!("n={n}: oracles disagree on {f:?}"))?;
            if qf {
                planar += 1;
                for _ in 0..10 {
                    let c = ctx.exp_gen(rng.random_range(0..ctx.order() - 1));
                    ensure(bent_check(&ctx, &f.scaled(&ctx, c)), || format!("n={n}: c·f not bent"))?;
                }
            }
        }
        // equivalents L_0(L_1(x)^2) of x^2 are planar, so bentness is exercised at every n
        let sq = DoPoly::monomial(n, 0, 0, ctx.one());
        for _ in 0..10 {
            let l0 = LinearizedPoly::random_permutation(&ctx, &mut rng);
            let l1 = LinearizedPoly::random_permutation(&ctx, &mut rng);
            let f = sq.compose_right(&ctx, &l1).compose_left(&ctx, &l0);
            ensure(is_planar_bruteforce(&ctx, &f).planar, || format!("n={n}: equivalent of x^2 not planar"))?;
            ensure(is_planar_quadform(&ctx, &f).planar, || format!("n={n}: equivalent of x^2 degenerate"))?;
            let c = ctx.exp_gen(rng.random_range(0..ctx.order() - 1));
            ensure(bent_check(&ctx, &f.scaled(&ctx, c)), || format!("n={n}: c·f not bent"))?;
        }
        notes.push(format!("n={n}: {planar}/100 random planar"));
    }
    Ok(notes.join(", "))
}

fn planar_count() -> Check {
    let r = run_sweep(&SweepSpec::new(3, 1, 3, Family::Cubic1)).map_err(|e| e.to_string())?;
    ensure(r.summary.planar == 13, || format!("{} planar pairs", r.summary.planar))?;
    Ok("13 planar pairs".into())
}

fn inequivalence() -> Check {
    let ctx = build_field(3, 1, 4).map_err(|e| e.to_string())?;
    let mut planar = 0;
    for a in ctx.elements().skip(1) {
        for b in ctx.elements().skip(1) {
            let f = Family::Quartic.poly(&ctx, a, b).map_err(|e| e.to_string())?;
            if !is_planar_quadform(&ctx, &f).planar {
                continue;
            }
            planar += 1;
            let tag = || format!("a={} b={}", ctx.display(a), ctx.display(b));
            let probe = quartic_square_equiv_probe(&ctx, a, b).map_err(|e| e.to_string())?;
            ensure(!probe, || format!("{}: probe found a square structure", tag()))?;
            ensure(linearized_square_decompose(&ctx, &f).is_none(), || format!("{}: f is a square", tag()))?;
            let scan = square_equiv_scan(&ctx, &f).map_err(|e| e.to_string())?;
            ensure(scan.is_none(), || format!("{}: exhaustive scan found {scan:?}", tag()))?;
        }
    }
    ensure(planar > 0, || "no planar quartic pair".into())?;
    Ok(format!("{planar} planar pairs, none equivalent to x^2"))
}

fn determinism() -> Check {
    let render = |workers| -> Result<String, String> {
        let mut spec = SweepSpec::new(3, 1, 3, Family::Cubic1);
        spec.workers = workers;
        let r = run_sweep(&spec).map_err(|e| e.to_string())?;
        render_report(&r, ReportFormat::Csv).map_err(|e| e.to_string())
    };
    let one = render(1)?;
    let eight = render(8)?;
    ensure(one == eight, || "CSV differs between 1 and 8 workers".into())?;
    Ok(format!("{} bytes identical", one.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("first cubic family iff, q in {3,5,7,9}", || cubic_iff(Family::Cubic1)),
        ("second cubic family iff, q in {3,5,7,9}", || cubic_iff(Family::Cubic2)),
        ("quartic sufficiency, q in {3,5}", quartic_sufficiency),
        ("zero-avoidance criterion, q in {3,5,7}", prop_ab),
        ("nondegeneracy formula three-way agreement", lemma_nondeg),
        ("(Tr, N) surjectivity, q in {3,5,7,9}", trn),
        ("oracle self-consistency and bentness", oracle_consistency),
        ("cubic1 planar count at q=3", planar_count),
        ("quartic inequivalence to x^2 at q=3", inequivalence),
        ("worker-count determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.2}s]", k + 1);
            }
        }
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
