//! The tower F_3 ⊂ F_9 ⊂ F_{9^3}: modulus, generator, Frobenius, relative
//! trace and norm, and square roots.

use planar::{build_field, Result};

fn main() -> Result<()> {
    let ctx = build_field(3, 2, 3)?;
    println!("F_{}^{} over F_{}: order {}", ctx.q(), ctx.n(), ctx.p(), ctx.order());
    println!("modulus (constant term first): {:?}", ctx.modulus());
    println!("generator coefficients: {:?}", ctx.coeffs(ctx.generator()));
    println!("log tables: {}", ctx.has_tables());

    let base = ctx.base_field();
    let x = ctx.exp_gen(100);
    let xq = ctx.frobenius(x, 1);
    println!("x = {}, x^q = {}, x^(q^3) = {}", ctx.display(x), ctx.display(xq), ctx.display(ctx.frobenius(x, 3)));

    let tr = ctx.rel_trace(x, base)?;
    let nm = ctx.rel_norm(x, base)?;
    println!("Tr(x) = {} in F_q: {}", ctx.display(tr), ctx.contains(base, tr));
    println!("N(x) = {} in F_q: {}", ctx.display(nm), ctx.contains(base, nm));

    let sq = ctx.mul(x, x);
    let root = ctx.sqrt(sq).expect("a square has a root");
    println!("sqrt(x^2) = {} (x or -x)", ctx.display(root));
    println!("g is a square: {}", ctx.is_nonzero_square(ctx.generator(), ctx.subfield(ctx.n())?)?);

    let squares = ctx.subfield_elements(base).into_iter().filter(|&y| ctx.is_nonzero_square(y, base).unwrap_or(false));
    println!("nonzero squares of F_9: {}", squares.count());
    Ok(())
}
