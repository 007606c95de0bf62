// Twisted braidings: the twisted Burau matrix, the twist involution with its
// Garside intertwiner, and the scaling deformation.

use vbraid::linrep::{
    burau_object, garside_intertwiner_check, scaling_instance, twist, twisted_burau_object,
    yb_check,
};

pub fn run_example() -> vbraid::Result<()> {
    let tb = twisted_burau_object();
    println!("twisted Burau block:\n{}", tb.sigma());
    println!("yang-baxter: {}", yb_check(&tb)?);

    let b = burau_object();
    let tw = twist(&b)?;
    println!("twist is an involution: {}", twist(&tw)? == b);
    println!(
        "garside intertwiner on 3 strands: {}",
        garside_intertwiner_check(&b, 3)?
    );

    let (base, companion) = scaling_instance(&b)?;
    println!("scaled block:\n{}", companion.sigma());
    println!(
        "both solve yang-baxter: {}",
        yb_check(&base)? && yb_check(&companion)?
    );
    Ok(())
}

fn main() {
    run_example().expect("twisted burau example");
}
