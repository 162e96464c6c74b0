use super::Group;
use crate::error::{Error, Result};
use crate::limits;

/// The group `C⟨a⟩` obtained from `C` by adjoining a central element `a` with
/// `a^r = g`, for `g` central in `C`.
///
/// Elements are pairs `(c, i)` with `0 <= i < r`, stored at index `i·|C| + c`,
/// and multiply with a carry:
/// `(c, i)(c', i') = (c c' g^⌊(i+i')/r⌋, (i+i') mod r)`.
/// The adjoined root is `(e, 1)`; for `r = 1` the result is a copy of `C`.
pub fn adjoined_root_extension(c: &Group, g: usize, r: usize) -> Result<Group> {
    if r == 0 {
        return Err(Error::Precondition("root degree must be positive".into()));
    }
    if g >= c.order() {
        return Err(Error::Precondition(format!("element {g} out of range")));
    }
    if let Some(x) = c.elements().find(|&x| !c.commute(x, g)) {
        return Err(Error::Precondition(format!("element {g} does not commute with {x}")));
    }
    let m = c.order();
    limits::check_order("root extension order", m as u128 * r as u128)?;
    let n = m * r;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (xi, xc) = (x / m, x % m);
        for y in 0..n {
            let (yi, yc) = (y / m, y % m);
            let s = xi + yi;
            let mut prod = c.mul(xc, yc);
            if s >= r {
                prod = c.mul(prod, g);
            }
            table[x * n + y] = ((s % r) * m + prod) as u32;
        }
    }
    let mut gens: Vec<usize> = c.generators().to_vec();
    if r > 1 {
        gens.push(m + c.identity());
    }
    Ok(Group::from_parts(n, table, Some(gens)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{are_isomorphic, cyclic, klein_four, symmetric};

    #[test]
    fn r_one_is_a_copy() {
        let s3 = symmetric(3).unwrap();
        let ext = adjoined_root_extension(&s3, 0, 1).unwrap();
        assert!(are_isomorphic(&ext, &s3).unwrap().is_some());
    }

    #[test]
    fn square_root_of_involution_is_z4() {
        let z2 = cyclic(2).unwrap();
        let ext = adjoined_root_extension(&z2, 1, 2).unwrap();
        ext.validate().unwrap();
        assert_eq!(ext.order(), 4);
        assert_eq!(ext.element_order(2), 4);
        assert!(are_isomorphic(&ext, &cyclic(4).unwrap()).unwrap().is_some());
    }

    #[test]
    fn square_root_of_identity_is_klein() {
        let z2 = cyclic(2).unwrap();
        let ext = adjoined_root_extension(&z2, 0, 2).unwrap();
        assert!(are_isomorphic(&ext, &klein_four().unwrap()).unwrap().is_some());
    }

    #[test]
    fn root_is_central_with_rth_power_g() {
        let z3 = cyclic(3).unwrap();
        let ext = adjoined_root_extension(&z3, 1, 3).unwrap();
        let a = 3;
        assert!(ext.elements().all(|x| ext.commute(x, a)));
        assert_eq!(ext.pow(a, 3), 1);
    }

    #[test]
    fn rejects_non_central() {
        let s3 = symmetric(3).unwrap();
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert!(matches!(adjoined_root_extension(&s3, t, 2), Err(Error::Precondition(_))));
    }
}
