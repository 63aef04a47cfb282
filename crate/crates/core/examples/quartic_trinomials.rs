//! The quartic family x^{q^3+q} + a x^{q^2+1} + b x^2 over F_{3^4}: the
//! sufficient conditions, their θ witnesses, and the planar pairs they miss.

use planar::criteria::{thm_quartic_sufficient, Family};
use planar::dopoly::is_planar_quadform;
use planar::{build_field, Result};

fn main() -> Result<()> {
    let ctx = build_field(3, 1, 4)?;
    let (mut covered, mut missed, mut shown) = (0, 0, 0);
    for a in ctx.elements().skip(1) {
        for b in ctx.elements().skip(1) {
            let verdict = thm_quartic_sufficient(&ctx, a, b)?;
            let planar = is_planar_quadform(&ctx, &Family::Quartic.poly(&ctx, a, b)?).planar;
            assert!(!verdict.satisfied || planar, "sufficient condition violated");
            if verdict.satisfied {
                covered += 1;
                if shown < 4 {
                    shown += 1;
                    let theta = verdict.witness.map(|t| ctx.display(t)).unwrap_or_else(|| "-".into());
                    println!("a={} b={} {} θ={theta}", ctx.display(a), ctx.display(b), verdict.branch_label());
                }
            } else if planar {
                missed += 1;
            }
        }
    }
    println!("{covered} pairs satisfy a condition, {missed} planar pairs satisfy none");
    Ok(())
}
