//! Both cubic trinomial families over F_{3^3}: every pair the closed-form
//! criterion accepts is planar, and nothing else is.

use planar::criteria::{thm_cubic1, thm_cubic2, Family};
use planar::dopoly::is_planar_quadform;
use planar::{build_field, Result};

fn main() -> Result<()> {
    let ctx = build_field(3, 1, 3)?;
    for family in [Family::Cubic1, Family::Cubic2] {
        let mut accepted = 0;
        let mut disagreements = 0;
        for a in ctx.elements().skip(1) {
            for b in ctx.elements().skip(1) {
                let verdict = match family {
                    Family::Cubic1 => thm_cubic1(&ctx, a, b)?,
                    _ => thm_cubic2(&ctx, a, b)?,
                };
                let planar = is_planar_quadform(&ctx, &family.poly(&ctx, a, b)?).planar;
                disagreements += (planar != verdict.satisfied) as u32;
                if verdict.satisfied {
                    accepted += 1;
                    if accepted <= 3 {
                        println!("{family}: a={} b={} via {}", ctx.display(a), ctx.display(b), verdict.branch_label());
                    }
                }
            }
        }
        println!("{family}: {accepted} planar pairs, {disagreements} disagreements\n");
    }
    Ok(())
}
