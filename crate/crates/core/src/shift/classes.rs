//! Shift-equivalence classes of squarefree factors.
//!
//! Bases for sigma-factorizations need not be irreducible: it is enough
//! that they are sigma_y-normal, pairwise sigma_y-coprime, and interact
//! with any external polynomial (numerator or denominator of a kernel)
//! only by full divisibility. This module refines the squarefree factors
//! of a polynomial by repeated gcds until those properties hold, then
//! groups the refined atoms into shift-equivalence classes.

use crate::arith::YPoly;
use crate::context::Context;
use crate::error::{Error, Result};

use super::dispersion::dispersion_set;
use super::shifts::shift_y_poly;

/// A squarefree factor with the multiplicity it carries in the input.
#[derive(Clone, Debug)]
pub(crate) struct Atom {
    pub poly: YPoly, // monic
    pub mult: usize,
}

/// One shift-equivalence class: members are associates of shifts of the
/// base, at the recorded offsets (minimum offset 0) and multiplicities.
#[derive(Clone, Debug)]
pub(crate) struct SigmaClass {
    pub base: YPoly, // monic
    pub members: Vec<(i64, usize)>,
}

/// Split the atoms until each is sigma_y-normal, distinct atoms at any
/// shift are either coprime or full associates, and each atom at any shift
/// is either coprime with every external polynomial or divides it.
pub(crate) fn refine_atoms(
    mut atoms: Vec<Atom>,
    externals: &[YPoly],
    ctx: &Context,
) -> Result<Vec<Atom>> {
    let ext_rads: Vec<YPoly> = externals
        .iter()
        .filter(|e| !e.is_constant())
        .map(|e| e.radical().map(|r| r.monic()))
        .collect::<Result<_>>()?;
    'outer: loop {
        // self splits: every atom must be sigma_y-normal
        for i in 0..atoms.len() {
            let a = atoms[i].poly.clone();
            for l in dispersion_set(&a, &a, ctx)? {
                if l == 0 {
                    continue;
                }
                let g = YPoly::gcd(&a, &shift_y_poly(&a, l, ctx));
                if !g.is_constant() {
                    split_atom(&mut atoms, i, &g)?;
                    continue 'outer;
                }
            }
        }
        // pair splits: partial overlaps at a shift split one side
        for i in 0..atoms.len() {
            for j in 0..atoms.len() {
                if i == j {
                    continue;
                }
                let a = atoms[i].poly.clone();
                let b = atoms[j].poly.clone();
                for l in dispersion_set(&a, &b, ctx)? {
                    let g = YPoly::gcd(&a, &shift_y_poly(&b, l, ctx));
                    if g.is_constant() {
                        continue;
                    }
                    if g.deg() < a.deg() {
                        split_atom(&mut atoms, i, &g)?;
                        continue 'outer;
                    }
                    let gb = shift_y_poly(&g, -l, ctx);
                    if gb.deg() < b.deg() {
                        split_atom(&mut atoms, j, &gb)?;
                        continue 'outer;
                    }
                    // full associates at this shift; grouping handles it
                }
            }
        }
        // external splits
        for i in 0..atoms.len() {
            let a = atoms[i].poly.clone();
            for e in &ext_rads {
                for l in dispersion_set(e, &a, ctx)? {
                    // gcd(e, sigma^l(a)) must be trivial or all of sigma^l(a)
                    let sa = shift_y_poly(&a, l, ctx);
                    let g = YPoly::gcd(e, &sa);
                    if g.is_constant() || g.deg() == sa.deg() {
                        continue;
                    }
                    let ga = shift_y_poly(&g, -l, ctx);
                    split_atom(&mut atoms, i, &ga)?;
                    continue 'outer;
                }
            }
        }
        return Ok(atoms);
    }
}

fn split_atom(atoms: &mut Vec<Atom>, i: usize, g: &YPoly) -> Result<()> {
    let a = atoms[i].clone();
    let g = g.monic();
    let rest = a.poly.exact_div(&g)?.monic();
    if g.is_constant() || rest.is_constant() {
        return Err(Error::Internal("degenerate atom split".into()));
    }
    atoms[i] = Atom {
        poly: g,
        mult: a.mult,
    };
    atoms.push(Atom {
        poly: rest,
        mult: a.mult,
    });
    Ok(())
}

/// Group refined atoms into shift-equivalence classes.
pub(crate) fn group_classes(atoms: &[Atom], ctx: &Context) -> Result<Vec<SigmaClass>> {
    let n = atoms.len();
    let mut assigned = vec![false; n];
    let mut classes: Vec<SigmaClass> = Vec::new();
    for i in 0..n {
        if assigned[i] {
            continue;
        }
        // start a class anchored at atom i with offset 0
        let mut members = vec![(i, 0i64)];
        assigned[i] = true;
        for j in 0..n {
            if assigned[j] {
                continue;
            }
            let a = &atoms[i].poly;
            let b = &atoms[j].poly;
            if a.deg() != b.deg() {
                continue;
            }
            // a shift l with b ~ sigma^l(a) shows up in the dispersion
            let mut offset = None;
            for l in dispersion_set(b, a, ctx)? {
                let sa = shift_y_poly(a, l, ctx);
                if sa.monic() == b.monic() {
                    offset = Some(l);
                    break;
                }
            }
            if let Some(l) = offset {
                members.push((j, l));
                assigned[j] = true;
            }
        }
        let min = members.iter().map(|(_, l)| *l).min().unwrap();
        let base_idx = members
            .iter()
            .find(|(_, l)| *l == min)
            .map(|(j, _)| *j)
            .unwrap();
        let base = atoms[base_idx].poly.monic();
        let mut mem: Vec<(i64, usize)> = members
            .iter()
            .map(|(j, l)| (l - min, atoms[*j].mult))
            .collect();
        mem.sort();
        classes.push(SigmaClass { base, members: mem });
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CoeffElem;

    fn int(n: i64) -> CoeffElem {
        CoeffElem::from_integer(n)
    }
    fn lin(c: i64) -> YPoly {
        YPoly::from_coeffs(vec![int(c), int(1)])
    }

    #[test]
    fn refinement_splits_chains() {
        let ctx = Context::shift(&[]);
        // one squarefree atom y(y+1)(y+5) splits into three
        let p = &(&lin(0) * &lin(1)) * &lin(5);
        let atoms = vec![Atom { poly: p, mult: 1 }];
        let refined = refine_atoms(atoms, &[], &ctx).unwrap();
        assert_eq!(refined.len(), 3);
        for a in &refined {
            assert_eq!(a.poly.deg(), Some(1));
        }
    }

    #[test]
    fn all_monic_linears_fall_in_one_class() {
        let ctx = Context::shift(&[]);
        // y(y+1) with mult 1 and (y+5)(y+6) with mult 2: in the shift case
        // every monic linear is equivalent to y, so the refinement splits
        // everything and one class collects all four offsets
        let atoms = vec![
            Atom {
                poly: &lin(0) * &lin(1),
                mult: 1,
            },
            Atom {
                poly: &lin(5) * &lin(6),
                mult: 2,
            },
        ];
        let refined = refine_atoms(atoms, &[], &ctx).unwrap();
        assert_eq!(refined.len(), 4);
        let classes = group_classes(&refined, &ctx).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].base, lin(0));
        assert_eq!(classes[0].members, vec![(0, 1), (1, 1), (5, 2), (6, 2)]);
    }

    #[test]
    fn parallel_chains_split_and_group() {
        let ctx = Context::shift(&[]);
        let x = ctx.x();
        // classes of p = y^2 + x and r = y^2 + x + 1 with different shift
        // patterns force a split of the combined squarefree atoms
        let p = YPoly::from_coeffs(vec![x.clone(), int(0), int(1)]);
        let r = YPoly::from_coeffs(vec![&x + &int(1), int(0), int(1)]);
        let s1 = &p * &r;
        let s2 = &shift_y_poly(&p, 5, &ctx) * &shift_y_poly(&r, 3, &ctx);
        let atoms = vec![
            Atom { poly: s1, mult: 1 },
            Atom { poly: s2, mult: 2 },
        ];
        let refined = refine_atoms(atoms, &[], &ctx).unwrap();
        assert_eq!(refined.len(), 4);
        let mut classes = group_classes(&refined, &ctx).unwrap();
        classes.sort_by_key(|c| c.members.clone());
        assert_eq!(classes.len(), 2);
        assert_eq!(classes[0].members, vec![(0, 1), (3, 2)]);
        assert_eq!(classes[0].base, r);
        assert_eq!(classes[1].members, vec![(0, 1), (5, 2)]);
        assert_eq!(classes[1].base, p);
    }

    #[test]
    fn unrelated_quadratics_stay_grouped_apart() {
        let ctx = Context::shift(&[]);
        let x = ctx.x();
        // y^2 + x and y^2 + y + x: no shift relations at all
        let a = YPoly::from_coeffs(vec![x.clone(), int(0), int(1)]);
        let b = YPoly::from_coeffs(vec![x, int(1), int(1)]);
        let atoms = vec![
            Atom {
                poly: &a * &b,
                mult: 3,
            },
        ];
        let refined = refine_atoms(atoms, &[], &ctx).unwrap();
        // no dispersion, so the product stays one sigma-normal atom
        assert_eq!(refined.len(), 1);
        let classes = group_classes(&refined, &ctx).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].members, vec![(0, 3)]);
    }
}
