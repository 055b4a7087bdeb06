use crate::error::{Error, Result};
use crate::hilbert::GradedComplex;
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::RingSignature;
use serde::{Deserialize, Serialize};

/// Parameters of a point family on a rational normal curve: nd - j
/// points on the curve in projective n-space, with optional power and
/// symbolic-power indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointFamilyParams {
    pub n: usize,
    pub d: u32,
    pub j: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
}

impl PointFamilyParams {
    pub fn new(n: usize, d: u32, j: usize) -> Result<Self> {
        let p = PointFamilyParams {
            n,
            d,
            j,
            r: None,
            m: None,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParameter(format!("n must be >= 2, got {}", self.n)));
        }
        if self.d < 2 {
            return Err(Error::InvalidParameter(format!("d must be >= 2, got {}", self.d)));
        }
        if self.j >= self.n {
            return Err(Error::InvalidParameter(format!(
                "j must satisfy 0 <= j <= n-1, got j={} for n={}",
                self.j, self.n
            )));
        }
        if self.r == Some(0) {
            return Err(Error::InvalidParameter("r must be >= 1".into()));
        }
        if self.m == Some(0) {
            return Err(Error::InvalidParameter("m must be >= 1".into()));
        }
        Ok(())
    }

    pub fn num_points(&self) -> u32 {
        self.n as u32 * self.d - self.j as u32
    }

    pub fn signature(&self) -> RingSignature {
        RingSignature::projective(self.n).expect("n >= 2")
    }
}

fn var(sig: RingSignature, i: usize) -> Polynomial {
    Polynomial::var(sig, i)
}

/// The hyperplane-product form H = x0^(d-1) - xn^(d-1).
pub fn h_poly(sig: RingSignature, d: u32) -> Polynomial {
    let n = sig.num_vars() - 1;
    let x0 = var(sig, 0);
    let xn = var(sig, n);
    x0.pow(d - 1)
        .unwrap()
        .sub(&xn.pow(d - 1).unwrap())
        .unwrap()
}

/// 2x2 minor of the Hankel matrix at columns (a, b): x_{a+1}x_b - x_a x_{b+1}.
fn hankel_minor(sig: RingSignature, a: usize, b: usize) -> Polynomial {
    let f = var(sig, a + 1).mul(&var(sig, b)).unwrap();
    let g = var(sig, a).mul(&var(sig, b + 1)).unwrap();
    f.sub(&g).unwrap()
}

/// The ideal of 2-minors of the 2 x n Hankel matrix, cutting out the
/// rational normal curve in projective n-space. Minors are listed so
/// that n = 2 yields (Q) and n = 3 yields (Q1, Q2, Q3).
pub fn hankel_ideal(n: usize) -> Result<Ideal> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("hankel_ideal needs n >= 2, got {n}")));
    }
    let sig = RingSignature::projective(n)?;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            pairs.push((a, b));
        }
    }
    // (1,2), (0,2), (0,1) ordering for n = 3, matching Q1, Q2, Q3
    pairs.sort_by(|x, y| y.cmp(x));
    let gens = pairs
        .into_iter()
        .map(|(a, b)| hankel_minor(sig, a, b))
        .collect();
    Ideal::new(sig, gens)
}

/// The three twisted-cubic quadrics (Q1, Q2, Q3) in K[x0..x3].
pub fn tcc_quadrics() -> (Polynomial, Polynomial, Polynomial) {
    let sig = RingSignature::projective(3).unwrap();
    (
        hankel_minor(sig, 1, 2),
        hankel_minor(sig, 0, 2),
        hankel_minor(sig, 0, 1),
    )
}

/// The ideal of nd - j points on the rational normal curve, built from
/// the closed-form generator lists (n = 2 and n = 3 have their own
/// forms; n >= 4 follows the general recursion).
pub fn rnc_points_ideal(p: &PointFamilyParams) -> Result<Ideal> {
    p.validate()?;
    let sig = p.signature();
    let n = p.n;
    let hankel = hankel_ideal(n)?;
    let h = h_poly(sig, p.d);
    let mut gens = hankel.generators().to_vec();
    match (n, p.j) {
        (2, 0) => {
            gens.push(var(sig, 1).mul(&h)?);
        }
        (2, 1) => {
            gens.push(var(sig, 1).mul(&h)?);
            gens.push(var(sig, 0).mul(&h)?);
        }
        (3, 0) => {
            let diff = var(sig, 2).sub(&var(sig, 1))?;
            gens.push(diff.mul(&h)?);
        }
        (3, j) => {
            // j = 1: x2 H, x1 H; j = 2 additionally x0 H
            for k in 0..=j {
                gens.push(var(sig, 2 - k).mul(&h)?);
            }
        }
        (_, 0) => {
            let diff = var(sig, n - 1).sub(&var(sig, 1))?;
            gens.push(diff.mul(&h)?);
        }
        (_, j) => {
            // x_{n-1} H, x_{n-2} H, ..., x_{n-j-1} H
            for k in 1..=(j + 1) {
                gens.push(var(sig, n - k).mul(&h)?);
            }
        }
    }
    Ideal::new(sig, gens)
}

/// The symbolic-defect witness polynomials (ambient n = 3):
/// f0 = Q3 (x2 - x3) H, f1 = Q1 Q3 H, f2 = Q3 H.
pub fn witness_poly(j: usize, d: u32) -> Result<Polynomial> {
    if j > 2 {
        return Err(Error::InvalidParameter(format!("witness index j must be 0..=2, got {j}")));
    }
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d must be >= 2, got {d}")));
    }
    let sig = RingSignature::projective(3)?;
    let (q1, _, q3) = tcc_quadrics();
    let h = h_poly(sig, d);
    match j {
        0 => {
            let factor = var(sig, 2).sub(&var(sig, 3))?;
            q3.mul(&factor)?.mul(&h)
        }
        1 => q1.mul(&q3)?.mul(&h),
        _ => q3.mul(&h),
    }
}

/// The variant of f0 with the (x2 - x1) factor used in the j = 0 point
/// ideal itself; the verbatim f0 uses (x2 - x3) instead, and the
/// harness reports which of the two actually witnesses the defect.
pub fn witness_poly_f0_variant(d: u32) -> Result<Polynomial> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d must be >= 2, got {d}")));
    }
    let sig = RingSignature::projective(3)?;
    let (_, _, q3) = tcc_quadrics();
    let h = h_poly(sig, d);
    let factor = var(sig, 2).sub(&var(sig, 1))?;
    q3.mul(&factor)?.mul(&h)
}

/// The auxiliary zero-dimensional ideal J = (Q1, Q2, Q3, G^r) with
/// G = (x2 - x1) H, used to pin the Hilbert table and reg(J) = rd + 1.
pub fn aux_ideal_j(d: u32, r: u32) -> Result<Ideal> {
    if d < 2 || r < 2 {
        return Err(Error::InvalidParameter(format!(
            "aux ideal needs d >= 2 and r >= 2, got d={d}, r={r}"
        )));
    }
    let sig = RingSignature::projective(3)?;
    let (q1, q2, q3) = tcc_quadrics();
    let h = h_poly(sig, d);
    let g = var(sig, 2).sub(&var(sig, 1))?.mul(&h)?;
    Ideal::new(sig, vec![q1, q2, q3, g.pow(r)?])
}

/// The stated syzygy complexes for the five (n, j) cases, parameterized
/// by d through H = x0^(d-1) - xn^(d-1).
pub fn stated_syzygy_complex(n: usize, d: u32, j: usize) -> Result<GradedComplex> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("d must be >= 2, got {d}")));
    }
    match (n, j) {
        (2, 0) => conic_complex_j0(d),
        (2, 1) => conic_complex_j1(d),
        (3, 0) => tcc_complex_j0(d),
        (3, 1) => tcc_complex_j1(d),
        (3, 2) => tcc_complex_j2(d),
        _ => Err(Error::InvalidParameter(format!(
            "no stated complex for n={n}, j={j}"
        ))),
    }
}

fn conic_complex_j0(d: u32) -> Result<GradedComplex> {
    let sig = RingSignature::projective(2)?;
    let h = h_poly(sig, d);
    let q = hankel_minor(sig, 0, 1);
    let g = var(sig, 1).mul(&h)?;
    let di = d as i64;
    Ok(GradedComplex {
        sig,
        twists: vec![vec![0], vec![2, di], vec![di + 2]],
        matrices: vec![
            vec![vec![q.clone(), g.clone()]],
            vec![vec![g], vec![q.neg()]],
        ],
    })
}

fn conic_complex_j1(d: u32) -> Result<GradedComplex> {
    let sig = RingSignature::projective(2)?;
    let h = h_poly(sig, d);
    let q = hankel_minor(sig, 0, 1);
    let x0 = var(sig, 0);
    let x1 = var(sig, 1);
    let x2 = var(sig, 2);
    let zero = Polynomial::zero(sig);
    let di = d as i64;
    Ok(GradedComplex {
        sig,
        twists: vec![vec![0], vec![2, di, di], vec![di + 1, di + 1]],
        matrices: vec![
            vec![vec![q, x1.mul(&h)?, x0.mul(&h)?]],
            vec![
                vec![zero, h],
                vec![x0, x1.neg()],
                vec![x1.neg(), x2],
            ],
        ],
    })
}

fn tcc_complex_j0(d: u32) -> Result<GradedComplex> {
    let sig = RingSignature::projective(3)?;
    let (q1, q2, q3) = tcc_quadrics();
    let h = h_poly(sig, d);
    let x0 = var(sig, 0);
    let x1 = var(sig, 1);
    let x2 = var(sig, 2);
    let x3 = var(sig, 3);
    let zero = Polynomial::zero(sig);
    let g = x2.sub(&x1)?.mul(&h)?;
    let x0dm2 = x0.pow(d - 2)?;
    let x3dm1 = x3.pow(d - 1)?;
    let di = d as i64;
    // third syzygy column entries shared between A2 columns 3 and 4
    let c3_r1 = x2.mul(&x3dm1)?;
    let c3_r2 = x2.mul(&h.sub(&x0dm2.mul(&x1)?)?)?;
    let c4_r2 = x1.mul(&h.sub(&x0dm2.mul(&x2)?)?)?;
    let r3_shared = x0dm2.mul(&x2.pow(2)?)?.sub(&x3.mul(&h)?)?;
    let a2 = vec![
        vec![x1.clone(), x0.clone(), c3_r1.clone(), c3_r1.clone(), zero.clone()],
        vec![x2.neg(), x1.neg(), c3_r2, c4_r2, zero.clone()],
        vec![
            x3.clone(),
            x2.clone(),
            r3_shared.clone(),
            r3_shared,
            x1.sub(&x2)?.mul(&h)?,
        ],
        vec![
            zero.clone(),
            zero.clone(),
            q1.clone(),
            q1.add(&q2)?,
            q3.clone(),
        ],
    ];
    let a3 = vec![
        vec![x2.mul(&h)?, x0.mul(&h)?],
        vec![
            x0dm2.mul(&x1)?.mul(&x2)?.neg(),
            x1.mul(&h)?.neg().sub(&x2.mul(&x3dm1)?)?,
        ],
        vec![x1.add(&x2)?, x0.add(&x1)?],
        vec![x2.neg(), x1.neg()],
        vec![x3, x2.clone()],
    ];
    Ok(GradedComplex {
        sig,
        twists: vec![
            vec![0],
            vec![2, 2, 2, di],
            vec![3, 3, di + 2, di + 2, di + 2],
            vec![di + 3, di + 3],
        ],
        matrices: vec![vec![vec![q1, q2, q3, g]], a2, a3],
    })
}

fn tcc_complex_j1(d: u32) -> Result<GradedComplex> {
    let sig = RingSignature::projective(3)?;
    let (q1, q2, q3) = tcc_quadrics();
    let h = h_poly(sig, d);
    let x0 = var(sig, 0);
    let x1 = var(sig, 1);
    let x2 = var(sig, 2);
    let x3 = var(sig, 3);
    let zero = Polynomial::zero(sig);
    let x0dm2 = x0.pow(d - 2)?;
    let x3dm1 = x3.pow(d - 1)?;
    let di = d as i64;
    let a2 = vec![
        vec![x1.clone(), zero.clone(), x0.clone(), x3dm1.neg(), zero.clone()],
        vec![x2.neg(), zero.clone(), x1.neg(), x0dm2.mul(&x1)?, zero.clone()],
        vec![x3.clone(), zero.clone(), x2.clone(), x0dm2.mul(&x2)?.neg(), h.clone()],
        vec![zero.clone(), x1.clone(), zero.clone(), x2.neg(), x0.clone()],
        vec![zero.clone(), x2.neg(), zero.clone(), x3.clone(), x1.neg()],
    ];
    let a3 = vec![
        vec![x1.mul(&h)?],
        vec![q2.neg()],
        vec![x0dm2.mul(&x1.pow(2)?)?.neg().add(&x2.mul(&x3dm1)?)?],
        vec![q3.neg()],
        vec![q1.clone()],
    ];
    Ok(GradedComplex {
        sig,
        twists: vec![
            vec![0],
            vec![2, 2, 2, di, di],
            vec![3, di + 1, 3, di + 1, di + 1],
            vec![di + 3],
        ],
        matrices: vec![
            vec![vec![q1, q2, q3, x2.mul(&h)?, x1.mul(&h)?]],
            a2,
            a3,
        ],
    })
}

fn tcc_complex_j2(d: u32) -> Result<GradedComplex> {
    let sig = RingSignature::projective(3)?;
    let (q1, q2, q3) = tcc_quadrics();
    let h = h_poly(sig, d);
    let x0 = var(sig, 0);
    let x1 = var(sig, 1);
    let x2 = var(sig, 2);
    let x3 = var(sig, 3);
    let zero = Polynomial::zero(sig);
    let x0dm2 = x0.pow(d - 2)?;
    let x3dm1 = x3.pow(d - 1)?;
    let di = d as i64;
    let a2 = vec![
        vec![x1.clone(), zero.clone(), x0.clone(), zero.clone(), zero.clone(), x3dm1.neg(), zero.clone(), zero.clone()],
        vec![x2.neg(), zero.clone(), x1.neg(), zero.clone(), zero.clone(), x0dm2.mul(&x1)?, h.clone(), zero.clone()],
        vec![x3.clone(), zero.clone(), x2.clone(), zero.clone(), zero.clone(), x0dm2.mul(&x2)?.neg(), zero.clone(), h.clone()],
        vec![zero.clone(), x1.clone(), zero.clone(), x0.clone(), zero.clone(), x2.neg(), zero.clone(), zero.clone()],
        vec![zero.clone(), x2.neg(), zero.clone(), zero.clone(), x0.clone(), x3.clone(), x2.neg(), x1.neg()],
        vec![zero.clone(), zero.clone(), zero.clone(), x2.neg(), x1.neg(), zero.clone(), x3.clone(), x2.clone()],
    ];
    let a3 = vec![
        vec![zero.clone(), zero.clone(), h.clone()],
        vec![x0.clone(), zero.clone(), x2.neg()],
        vec![zero.clone(), x3dm1.clone(), x0dm2.mul(&x1)?.neg()],
        vec![x1.neg(), x2.clone(), zero.clone()],
        vec![x2.clone(), x3.neg(), zero.clone()],
        vec![zero.clone(), x0.clone(), x1.neg()],
        vec![zero.clone(), x1.neg(), x2.clone()],
        vec![zero.clone(), x2.clone(), x3.neg()],
    ];
    Ok(GradedComplex {
        sig,
        twists: vec![
            vec![0],
            vec![2, 2, 2, di, di, di],
            vec![3, di + 1, 3, di + 1, di + 1, di + 1, di + 1, di + 1],
            vec![di + 2, di + 2, di + 2],
        ],
        matrices: vec![
            vec![vec![q1, q2, q3, x2.mul(&h)?, x1.mul(&h)?, x0.mul(&h)?]],
            a2,
            a3,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    fn p3(text: &str) -> Polynomial {
        parse_polynomial(text, RingSignature::projective(3).unwrap()).unwrap()
    }

    #[test]
    fn hankel_n2_is_the_conic() {
        let i = hankel_ideal(2).unwrap();
        assert_eq!(i.generators().len(), 1);
        assert_eq!(i.generators()[0].to_string(), "x1^2-x0*x2");
    }

    #[test]
    fn hankel_n3_matches_q1_q2_q3() {
        let i = hankel_ideal(3).unwrap();
        let expect = vec![p3("x2^2-x1*x3"), p3("x1*x2-x0*x3"), p3("x1^2-x0*x2")];
        assert_eq!(i.generators(), expect.as_slice());
    }

    #[test]
    fn points_ideal_generator_lists() {
        // n=2, d=2, j=1
        let p = PointFamilyParams::new(2, 2, 1).unwrap();
        let i = rnc_points_ideal(&p).unwrap();
        let sig = RingSignature::projective(2).unwrap();
        let texts: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(
            texts,
            vec!["x1^2-x0*x2", "x0*x1-x1*x2", "x0^2-x0*x2"]
        );
        let _ = sig;
        // n=3, d=2, j=0 includes (x2-x1)(x0-x3)
        let p = PointFamilyParams::new(3, 2, 0).unwrap();
        let i = rnc_points_ideal(&p).unwrap();
        assert_eq!(i.generators().len(), 4);
        assert_eq!(i.generators()[3], p3("(x2-x1)*(x0-x3)"));
        // n=4 follows the general recursion
        let p = PointFamilyParams::new(4, 2, 2).unwrap();
        let i = rnc_points_ideal(&p).unwrap();
        // C(4,2)=6 minors plus x3 H, x2 H, x1 H
        assert_eq!(i.generators().len(), 9);
    }

    #[test]
    fn generators_contain_hankel_verbatim() {
        for n in 2..=4usize {
            for j in 0..n.min(3) {
                let p = PointFamilyParams::new(n, 3, j).unwrap();
                let i = rnc_points_ideal(&p).unwrap();
                let hankel = hankel_ideal(n).unwrap();
                for g in hankel.generators() {
                    assert!(i.generators().contains(g));
                }
                assert!(i.is_homogeneous());
            }
        }
    }

    #[test]
    fn witness_polynomials() {
        assert_eq!(witness_poly(2, 2).unwrap(), p3("(x1^2-x0*x2)*(x0-x3)"));
        let f1 = witness_poly(1, 2).unwrap();
        assert_eq!(f1, p3("(x2^2-x1*x3)*(x1^2-x0*x2)*(x0-x3)"));
        assert_eq!(f1.degree(), Some(5));
        assert!(witness_poly(3, 2).is_err());
        // deg f1 = d + 3
        for d in 2..=4 {
            assert_eq!(witness_poly(1, d).unwrap().degree(), Some(d + 3));
        }
    }

    #[test]
    fn aux_ideal_generators() {
        let j = aux_ideal_j(2, 2).unwrap();
        assert_eq!(j.generators().len(), 4);
        assert_eq!(j.generators()[3], p3("((x2-x1)*(x0-x3))^2"));
        assert!(aux_ideal_j(2, 1).is_err());
    }

    #[test]
    fn params_validation() {
        assert!(PointFamilyParams::new(1, 2, 0).is_err());
        assert!(PointFamilyParams::new(2, 1, 0).is_err());
        assert!(PointFamilyParams::new(2, 2, 2).is_err());
        assert_eq!(PointFamilyParams::new(3, 2, 1).unwrap().num_points(), 5);
    }

    #[test]
    fn unsupported_complex_rejected() {
        assert!(stated_syzygy_complex(4, 2, 0).is_err());
    }

    #[test]
    fn all_five_complexes_verify_at_d2() {
        use crate::hilbert::verify_complex;
        for (n, j) in [(2usize, 0usize), (2, 1), (3, 0), (3, 1), (3, 2)] {
            let c = stated_syzygy_complex(n, 2, j).unwrap();
            let p = PointFamilyParams::new(n, 2, j).unwrap();
            let i = rnc_points_ideal(&p).unwrap();
            assert!(verify_complex(&c, &i, 10).unwrap(), "n={n} j={j}");
        }
    }

    #[test]
    fn complex_compositions_vanish_at_d3() {
        for (n, j) in [(2usize, 0usize), (2, 1), (3, 0), (3, 1), (3, 2)] {
            let c = stated_syzygy_complex(n, 3, j).unwrap();
            assert!(c.compositions_vanish().unwrap(), "n={n} j={j}");
        }
    }

    #[test]
    fn corrupting_a_sign_breaks_the_complex() {
        let mut c = stated_syzygy_complex(2, 3, 0).unwrap();
        c.matrices[1][0][0] = c.matrices[1][0][0].neg();
        assert!(!c.compositions_vanish().unwrap());
    }

    #[test]
    fn tcc_j0_transcription_pin() {
        let c = stated_syzygy_complex(3, 3, 0).unwrap();
        let a1 = &c.matrices[0][0];
        assert_eq!(a1[0], p3("x2^2-x1*x3"));
        assert_eq!(a1[1], p3("x1*x2-x0*x3"));
        assert_eq!(a1[2], p3("x1^2-x0*x2"));
        assert_eq!(a1[3], p3("(x2-x1)*(x0^2-x3^2)"));
        let a2 = &c.matrices[1];
        assert_eq!(a2[0][2], p3("x2*x3^2"));
        assert_eq!(a2[1][2], p3("x2*(x0^2-x3^2-x0*x1)"));
        assert_eq!(a2[1][3], p3("x1*(x0^2-x3^2-x0*x2)"));
        assert_eq!(a2[2][2], p3("x0*x2^2-x3*(x0^2-x3^2)"));
        assert_eq!(a2[3][2], p3("x2^2-x1*x3"));
        assert_eq!(a2[3][3], p3("x2^2-x1*x3+x1*x2-x0*x3"));
        assert_eq!(a2[3][4], p3("x1^2-x0*x2"));
        assert_eq!(a2[2][4], p3("(x1-x2)*(x0^2-x3^2)"));
        let a3 = &c.matrices[2];
        assert_eq!(a3[0][0], p3("x2*(x0^2-x3^2)"));
        assert_eq!(a3[1][1], p3("-x1*(x0^2-x3^2)-x2*x3^2"));
        assert_eq!(a3[4][0], p3("x3"));
    }

    #[test]
    fn tcc_j1_is_rank_symmetric() {
        let c = stated_syzygy_complex(3, 2, 1).unwrap();
        let ranks: Vec<usize> = c.twists.iter().map(|t| t.len()).collect();
        assert_eq!(ranks, vec![1, 5, 5, 1]);
        let d = 2i64;
        let dual: Vec<i64> = c.twists[2].iter().map(|a| d + 3 - a).collect();
        let mut sorted = dual;
        sorted.sort();
        let mut first = c.twists[1].clone();
        first.sort();
        assert_eq!(sorted, first);
    }
}
