//! Square structure: recognising L(x)^2, finding L_0(f) = L_1(x)^2 with
//! L_1 = αx^{q^2} + βx, and showing planar quartic trinomials have none.

use planar::criteria::Family;
use planar::dopoly::{is_planar_quadform, linearized_square_decompose, quartic_square_equiv_probe, square_equiv_scan};
use planar::{build_field, DoPoly, LinearizedPoly, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<()> {
    let ctx = build_field(3, 1, 4)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let l = LinearizedPoly::random_permutation(&ctx, &mut rng);
    let square = DoPoly::monomial(4, 0, 0, ctx.one()).compose_right(&ctx, &l);
    let root = linearized_square_decompose(&ctx, &square).expect("L(x)^2 decomposes");
    println!("L(x)^2 recovered up to sign: {}", root == l || root.coeffs().iter().zip(l.coeffs()).all(|(&r, &c)| r == ctx.neg(c)));

    let (alpha, beta) = (ctx.exp_gen(3), ctx.exp_gen(17));
    let l1 = LinearizedPoly::new(vec![beta, ctx.zero(), alpha, ctx.zero()]);
    assert!(l1.is_permutation(&ctx));
    let l0 = LinearizedPoly::random_permutation(&ctx, &mut rng);
    let disguised = DoPoly::monomial(4, 0, 0, ctx.one()).compose_right(&ctx, &l1).compose_left(&ctx, &l0);
    println!("hidden: α={} β={}", ctx.display(alpha), ctx.display(beta));
    match square_equiv_scan(&ctx, &disguised)? {
        Some(eq) => println!("equivalent of x^2 found: α={} β={}", ctx.display(eq.alpha), ctx.display(eq.beta)),
        None => println!("no square structure found"),
    }

    let mut checked = 0;
    for a in ctx.elements().skip(1).step_by(7) {
        for b in ctx.elements().skip(1).step_by(5) {
            let f = Family::Quartic.poly(&ctx, a, b)?;
            if !is_planar_quadform(&ctx, &f).planar {
                continue;
            }
            checked += 1;
            assert!(!quartic_square_equiv_probe(&ctx, a, b)?);
            assert!(square_equiv_scan(&ctx, &f)?.is_none());
        }
    }
    println!("{checked} planar quartic trinomials checked, none equivalent to x^2");
    Ok(())
}
