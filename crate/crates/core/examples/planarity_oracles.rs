//! The two planarity oracles side by side: kernel scan of the difference
//! maps and nondegeneracy of the trace forms.

use planar::dopoly::{gram_matrix, is_planar_bruteforce, is_planar_quadform, parse::parse_poly};
use planar::{build_field, Result};

fn main() -> Result<()> {
    let ctx = build_field(5, 1, 3)?;
    for src in ["x^{q^2+1} + g x^{q+1} + x^2", "x^{q^2+1} + x^{q+1} + x^2", "x^{q+1}"] {
        let f = parse_poly(&ctx, src)?;
        let bf = is_planar_bruteforce(&ctx, &f);
        let qf = is_planar_quadform(&ctx, &f);
        println!("{src}");
        println!("  brute force: planar={} witness={:?}", bf.planar, bf.witness.map(|c| ctx.display(c)));
        println!("  quadratic form: planar={} witness={:?}", qf.planar, qf.witness.map(|c| ctx.display(c)));

        let c = qf.witness.unwrap_or_else(|| ctx.one());
        let gram = gram_matrix(&ctx, &f, c)?;
        let (lin, _) = f.diff_map(&ctx, c)?;
        println!(
            "  at c={}: det = {}, rank of the difference map = {}",
            ctx.display(c),
            ctx.display(gram.det(&ctx)),
            lin.rank(&ctx)
        );
    }
    Ok(())
}
