//! Exact Walsh values in Z[ζ_p]: a planar map has |S_f(b)|^2 = |F| for every
//! b, a non-planar one does not.

use planar::dopoly::{bent_check, char_sum, parse::parse_poly};
use planar::{build_field, Result};

fn main() -> Result<()> {
    let ctx = build_field(3, 1, 3)?;
    for src in ["x^2", "x^{q^2+1} + x^{q+1} + x^2", "x^{q+1}"] {
        let f = parse_poly(&ctx, src)?;
        let s = char_sum(&ctx, &f, ctx.zero());
        println!("{src}");
        println!("  S_f(0) = {s}");
        println!("  |S_f(0)|^2 = {}", s.norm_sq());
        println!("  bent: {}", bent_check(&ctx, &f));
    }
    Ok(())
}
