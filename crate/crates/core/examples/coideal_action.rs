//! Coideal generators acting on V^{⊗d}, commuting with the Hecke action.

use affine_schur::coideal::{defining_relations, CoidealAction, CoidealGen};
use affine_schur::{Params, TensorModule, Variant};

fn main() -> affine_schur::Result<()> {
    for variant in [Variant::JJ, Variant::JI] {
        let m = TensorModule::new(3, 2, variant, Params::generic())?;
        let act = CoidealAction::new(&m);
        let v = m.basis(&m.window(1)[7])?;
        println!("[{variant}] v = {v}");
        for g in act.layout().generators().into_iter().take(4) {
            println!("  {} . v = {}", g.name(3), act.act(g, &v)?);
        }

        // Commutation with T_1 on this vector.
        let g = CoidealGen::E(0);
        let a = m.act_t(&act.act(g, &v)?, 1)?;
        let b = act.act(g, &m.act_t(&v, 1)?)?;
        println!("  e_0 commutes with T1 on v: {}", a == b);

        let rels = defining_relations(act.layout(), m.params())?;
        let held = rels
            .iter()
            .filter(|r| act.act_sum(&r.lhs, &v).ok() == act.act_sum(&r.rhs, &v).ok())
            .count();
        println!("  {held} of {} defining relations hold on v", rels.len());
    }
    Ok(())
}
