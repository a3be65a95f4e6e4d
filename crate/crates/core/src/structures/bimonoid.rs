use crate::spanv::{Mismatch, SpanV, SpanVError, VCell1, VCell2};
use crate::vbackend::VBackend;

use super::kit::{fit, record_using, Kit};
use super::monoid::{check_strict_comonoid, check_strict_monoid};
use super::{CheckReport, ComonoidData, Counterexample, MonoidData, OplaxBimonoidData, StructError};

/// Source and target 1-cells of θ, θ₀, χ, χ₀ in that order.
pub fn structure_boundaries<B: VBackend>(
    e: &SpanV<B>,
    mon: &MonoidData<B>,
    com: &ComonoidData<B>,
) -> Result<[(VCell1<B>, VCell1<B>); 4], StructError> {
    if mon.carrier != com.carrier {
        return Err(StructError::ShapeMismatch("monoid and comonoid live on different carriers".into()));
    }
    let k = Kit::new(e, &mon.carrier);
    let (m, j, d, u) = (&mon.mlt, &mon.uni, &com.lcm, &com.lcu);
    Ok([
        (k.c(&[m, d])?, k.c(&[&k.t(&[d, d]), &k.mid_swap(), &k.t(&[m, m])])?),
        (k.c(&[j, d])?, k.t(&[j, j])),
        (k.c(&[m, u])?, k.t(&[u, u])),
        (k.c(&[j, u])?, k.unit_cell()),
    ])
}

/// The four structure cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCells<B: VBackend> {
    pub theta: VCell2<B>,
    pub theta0: VCell2<B>,
    pub chi: VCell2<B>,
    pub chi0: VCell2<B>,
}

/// The only possible θ, θ₀, χ, χ₀ when every target has a monic leg and
/// the candidates factor the components.
pub fn infer_unique_structure_cells<B: VBackend>(
    e: &SpanV<B>,
    mon: &MonoidData<B>,
    com: &ComonoidData<B>,
) -> Result<Option<StructureCells<B>>, StructError> {
    let [t, t0, c, c0] = structure_boundaries(e, mon, com)?;
    let find = |(a, b): &(VCell1<B>, VCell1<B>)| e.unique_2cell(a, b);
    let (Some(theta), Some(theta0), Some(chi), Some(chi0)) = (find(&t)?, find(&t0)?, find(&c)?, find(&c0)?) else {
        return Ok(None);
    };
    Ok(Some(StructureCells { theta, theta0, chi, chi0 }))
}

pub(crate) const CELL_NAMES: [&str; 4] = ["theta", "theta0", "chi", "chi0"];

/// Structure cells each axiom pastes, indexed as in [`CELL_NAMES`].
const USES: [&[usize]; 10] = [&[0], &[0, 1], &[2], &[2, 3], &[0], &[1], &[0, 2], &[1, 3], &[0, 2], &[1, 3]];

/// Each given cell on its expected boundaries, with a counterexample for
/// the ones that are not valid 2-cells.
pub(crate) fn normalize_cells<B: VBackend>(
    e: &SpanV<B>,
    d: &OplaxBimonoidData<B>,
) -> Result<[(VCell2<B>, Option<Counterexample>); 4], StructError> {
    let bounds = structure_boundaries(e, &d.monoid, &d.comonoid)?;
    let given = [&d.theta, &d.theta0, &d.chi, &d.chi0];
    let mut out = Vec::with_capacity(4);
    for ((name, cell), (src, tgt)) in CELL_NAMES.iter().zip(given).zip(bounds) {
        out.push(fit(e, name, cell, &src, &tgt)?);
    }
    Ok(out.try_into().expect("four cells"))
}

struct Axioms<'a, 'e, B: VBackend> {
    k: &'a Kit<'e, B>,
    m: &'a VCell1<B>,
    j: &'a VCell1<B>,
    d: &'a VCell1<B>,
    u: &'a VCell1<B>,
    theta: &'a VCell2<B>,
    theta0: &'a VCell2<B>,
    chi: &'a VCell2<B>,
    chi0: &'a VCell2<B>,
}

impl<B: VBackend> Axioms<'_, '_, B> {
    fn run(&self, n: usize) -> Result<Option<Mismatch>, SpanVError> {
        let k = self.k;
        let e = k.e;
        let (m, j, d, u) = (self.m, self.j, self.d, self.u);
        let (th, th0, chi, chi0) = (self.theta, self.theta0, self.chi, self.chi0);
        let i1 = k.id(1);
        let i2 = k.id(2);
        let swap_mm = k.c(&[&k.mid_swap(), &k.t(&[m, m])])?;
        let dd_swap = k.c(&[&k.t(&[d, d]), &k.mid_swap()])?;
        let both = |l: VCell2<B>, r: VCell2<B>| e.cells2_equal(&l, &r);
        match n {
            1 => {
                let l = k.chain(&[
                    k.w(Some(&k.t(&[&i1, m])), th, None)?,
                    k.w(Some(&k.t(&[d, &i2])), &k.t2(&[&k.id2(&i2), th]), Some(&swap_mm))?,
                ])?;
                let r = k.chain(&[
                    k.w(Some(&k.t(&[m, &i1])), th, None)?,
                    k.w(Some(&k.t(&[&i2, d])), &k.t2(&[th, &k.id2(&i2)]), Some(&swap_mm))?,
                ])?;
                both(l, r)
            }
            2 => {
                let l = k.chain(&[
                    k.w(Some(&k.t(&[j, &i1])), th, None)?,
                    k.w(Some(d), &k.t2(&[th0, &k.id2(&i2)]), Some(&swap_mm))?,
                ])?;
                let r = k.chain(&[
                    k.w(Some(&k.t(&[&i1, j])), th, None)?,
                    k.w(Some(d), &k.t2(&[&k.id2(&i2), th0]), Some(&swap_mm))?,
                ])?;
                let id = k.id2(d);
                match both(l, id.clone())? {
                    None => both(r, id),
                    bad => Ok(bad),
                }
            }
            3 => {
                let l = k.chain(&[
                    k.w(Some(&k.t(&[m, &i1])), chi, None)?,
                    k.w(None, &k.t2(&[chi, &k.id2(&i1)]), Some(u))?,
                ])?;
                let r = k.chain(&[
                    k.w(Some(&k.t(&[&i1, m])), chi, None)?,
                    k.w(None, &k.t2(&[&k.id2(&i1), chi]), Some(u))?,
                ])?;
                both(l, r)
            }
            4 => {
                let l = k.chain(&[
                    k.w(Some(&k.t(&[j, &i1])), chi, None)?,
                    k.w(None, &k.t2(&[chi0, &k.id2(&i1)]), Some(u))?,
                ])?;
                let r = k.chain(&[
                    k.w(Some(&k.t(&[&i1, j])), chi, None)?,
                    k.w(None, &k.t2(&[&k.id2(&i1), chi0]), Some(u))?,
                ])?;
                let id = k.id2(u);
                match both(l, id.clone())? {
                    None => both(r, id),
                    bad => Ok(bad),
                }
            }
            5 => {
                let l = k.chain(&[
                    k.w(None, th, Some(&k.t(&[d, &i1])))?,
                    k.w(Some(&k.c(&[&dd_swap, &k.t(&[&i2, m])])?), &k.t2(&[th, &k.id2(&i1)]), None)?,
                ])?;
                let r = k.chain(&[
                    k.w(None, th, Some(&k.t(&[&i1, d])))?,
                    k.w(Some(&k.c(&[&dd_swap, &k.t(&[m, &i2])])?), &k.t2(&[&k.id2(&i1), th]), None)?,
                ])?;
                both(l, r)
            }
            6 => {
                let l = k.chain(&[
                    k.w(None, th0, Some(&k.t(&[d, &i1])))?,
                    k.w(Some(j), &k.t2(&[th0, &k.id2(&i1)]), None)?,
                ])?;
                let r = k.chain(&[
                    k.w(None, th0, Some(&k.t(&[&i1, d])))?,
                    k.w(Some(j), &k.t2(&[&k.id2(&i1), th0]), None)?,
                ])?;
                both(l, r)
            }
            7 => {
                let l = k.chain(&[
                    k.w(None, th, Some(&k.t(&[&i1, u])))?,
                    k.w(Some(&k.c(&[&dd_swap, &k.t(&[m, &i2])])?), &k.t2(&[&k.id2(&i1), chi]), None)?,
                ])?;
                both(l, k.id2(m))
            }
            8 => {
                let l = k.chain(&[
                    k.w(None, th0, Some(&k.t(&[&i1, u])))?,
                    k.w(Some(j), &k.t2(&[&k.id2(&i1), chi0]), None)?,
                ])?;
                both(l, k.id2(j))
            }
            9 => {
                let l = k.chain(&[
                    k.w(None, th, Some(&k.t(&[u, &i1])))?,
                    k.w(Some(&k.c(&[&dd_swap, &k.t(&[&i2, m])])?), &k.t2(&[chi, &k.id2(&i1)]), None)?,
                ])?;
                both(l, k.id2(m))
            }
            10 => {
                let l = k.chain(&[
                    k.w(None, th0, Some(&k.t(&[u, &i1])))?,
                    k.w(Some(j), &k.t2(&[chi0, &k.id2(&i1)]), None)?,
                ])?;
                both(l, k.id2(j))
            }
            _ => unreachable!("ten axioms"),
        }
    }
}

/// Strict monoid and comonoid laws followed by the ten compatibility
/// axioms `ax1` to `ax10`. A structure cell that is not a valid 2-cell
/// fails every axiom pasting it.
pub fn check_oplax_bimonoid<B: VBackend>(e: &SpanV<B>, d: &OplaxBimonoidData<B>) -> Result<CheckReport, StructError> {
    let mut report = CheckReport::new();
    report.extend_prefixed("monoid", check_strict_monoid(e, &d.monoid)?);
    report.extend_prefixed("comonoid", check_strict_comonoid(e, &d.comonoid)?);
    let fitted = normalize_cells(e, d)?;
    let (cells, invalid): (Vec<_>, Vec<_>) = fitted.into_iter().unzip();
    let k = Kit::new(e, &d.monoid.carrier);
    let ax = Axioms {
        k: &k,
        m: &d.monoid.mlt,
        j: &d.monoid.uni,
        d: &d.comonoid.lcm,
        u: &d.comonoid.lcu,
        theta: &cells[0],
        theta0: &cells[1],
        chi: &cells[2],
        chi0: &cells[3],
    };
    for (n, uses) in USES.iter().enumerate() {
        let id = format!("ax{}", n + 1);
        let used: Vec<_> = uses.iter().map(|&c| &invalid[c]).collect();
        record_using(&mut report, id, &used, || ax.run(n + 1));
    }
    Ok(report)
}
