//! Relative condition (iv) and membership transfer along k -> kA2.

use dualcheck::linalg::Field;
use dualcheck::resolution::ResolutionWindow;
use dualcheck::samples;
use dualcheck::validate::{check_relative_condition_iv, membership_base_change_test, BaseChange, ModuleSide, PseudoDualizingCandidate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = ResolutionWindow::default();
    let field = Field::Rationals;
    let (k, r) = (samples::ground(field), samples::a2(field));
    let l = PseudoDualizingCandidate::regular(k.clone());
    let u = PseudoDualizingCandidate::regular(r.clone());

    // 1 goes to the unit of kA2 on both sides; the structural map is the same inclusion
    let unit = r.unit().clone();
    let bc = BaseChange::new(l.complex(), u.complex().clone(), unit.clone(), unit.clone(), vec![(0, unit)])?;
    let report = check_relative_condition_iv(&l, &bc, w)?;
    println!("relative (iv): {}", serde_json::to_string(&report.verdict)?);

    for side in [ModuleSide::R, ModuleSide::S] {
        let mut agree = 0;
        let ms = samples::modules_up_to_dim(&r, 3)?;
        for m in &ms {
            agree += usize::from(membership_base_change_test(m, side, &l, &u, &bc, 0, w)?.agree);
        }
        println!("{side:?}: oracles agree on {agree} of {} modules", ms.len());
    }
    Ok(())
}
