//! Builds a few small groups and prints their basic structure.

use std::sync::Arc;

use kfgr::groups::{dihedral, parse_builtin, symmetric, wreath_product, Registry};

fn main() -> kfgr::Result<()> {
    let registry = Registry::new();
    for name in ["Z6", "Z2xZ2", "S3", "D8", "S4", "Z2xS3"] {
        let g = parse_builtin(name)?;
        let id = registry.canonical_class(&g)?;
        let cc = g.conjugacy_classes();
        let sizes: Vec<usize> = (0..cc.len()).map(|c| cc.class_size(c)).collect();
        println!(
            "{name:>6}: order {:>2}, class {id} named {}, class sizes {sizes:?}, center {}, derived {}",
            g.order(),
            registry.name(id),
            g.center().len(),
            g.derived_subgroup().len()
        );
    }

    // the wreath product Z2 wr S3 is the hyperoctahedral group of order 48
    let w = wreath_product(&Arc::new(parse_builtin("Z2")?), 3)?;
    let id = registry.canonical_class(w.group())?;
    println!("Z2 wr S3: order {}, {} classes, class {id}", w.group().order(), w.group().conjugacy_classes().len());

    // S3 and the dihedral group of order 6 land in one class
    let a = registry.canonical_class(&symmetric(3)?)?;
    let b = registry.canonical_class(&dihedral(6)?)?;
    println!("S3 {a} and D6 {b} share a class: {}", a == b);
    Ok(())
}
