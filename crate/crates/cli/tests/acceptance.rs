//! Acceptance suite: one test per criterion, each printing a single
//! `PASS`/`FAIL` line with counts and timing. Run with
//! `cargo test -p recfan --test acceptance -- --nocapture --test-threads 1`.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use recfan_core::fanops::embed_at_zero;
use recfan_core::{
    aff, arrangement_complex, cone_complex, extendable_subdivision, fixtures, recession_complex,
    roundtrip_check, theorem14_pipeline, Coverage, HRep, Halfspace, PolyhedralComplex, PolyhedralSet,
    Polyhedron, QVector, Rational,
};

fn report(id: u32, name: &str, ok: bool, detail: &str, elapsed: Duration) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} {verdict} {name}: {detail} ({:.2?})", elapsed);
}

fn hs(a: &[i64], b: i64) -> Halfspace {
    Halfspace::from_i64s(a, b).unwrap()
}

fn rational(rng: &mut ChaCha8Rng, max: i64) -> Rational {
    Rational::new(rng.gen_range(-max..=max), rng.gen_range(1..=3i64)).unwrap()
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize, max: i64) -> QVector {
    QVector::new((0..dim).map(|_| rational(rng, max)).collect())
}

fn random_hyperplane(rng: &mut ChaCha8Rng, dim: usize) -> Halfspace {
    loop {
        let a = random_vector(rng, dim, 3);
        if !a.is_zero() {
            return Halfspace::new(a, rational(rng, 3)).unwrap();
        }
    }
}

fn random_arrangement(rng: &mut ChaCha8Rng) -> PolyhedralComplex {
    let dim = rng.gen_range(1..=3usize);
    let k = rng.gen_range(0..=4usize);
    let planes: Vec<Halfspace> = (0..k).map(|_| random_hyperplane(rng, dim)).collect();
    arrangement_complex(dim, &planes).unwrap()
}

/// A random polyhedron containing a random point, so never empty.
fn random_polyhedron(rng: &mut ChaCha8Rng, dim: usize, max_ineqs: usize) -> Polyhedron {
    let p = random_vector(rng, dim, 2);
    let m = rng.gen_range(0..=max_ineqs);
    let mut ineqs = Vec::new();
    for _ in 0..m {
        let a = random_vector(rng, dim, 3);
        if a.is_zero() {
            continue;
        }
        let slack = Rational::new(rng.gen_range(0..=3i64), rng.gen_range(1..=2i64)).unwrap();
        let b = &a.dot(&p) - &slack;
        ineqs.push(Halfspace::new(a, b).unwrap());
    }
    let mut eqs = Vec::new();
    if dim > 1 && rng.gen_bool(0.15) {
        let a = random_vector(rng, dim, 3);
        if !a.is_zero() {
            let b = a.dot(&p);
            eqs.push(Halfspace::new(a, b).unwrap());
        }
    }
    Polyhedron::from_hrep(HRep::new(dim, ineqs, eqs)).unwrap()
}

fn random_subcomplex(rng: &mut ChaCha8Rng, c: &PolyhedralComplex) -> PolyhedralComplex {
    let p = rng.gen_range(0.2..0.8);
    let mut cells: Vec<Polyhedron> = c.cells().iter().filter(|_| rng.gen_bool(p)).cloned().collect();
    if cells.is_empty() {
        cells.push(c.cells()[rng.gen_range(0..c.len())].clone());
    }
    PolyhedralComplex::build(c.dim(), cells).unwrap()
}

#[test]
fn criterion_01_two_sheet_recession_witness() {
    let t = Instant::now();
    let c = fixtures::example17();
    let rec = recession_complex(&c).unwrap();
    let expected = Polyhedron::from_hrep(HRep::new(
        3,
        vec![hs(&[0, 1, 0], 0), hs(&[1, -1, 0], 0)],
        vec![hs(&[0, 0, 1], 0)],
    ))
    .unwrap();
    let [l1, l2]: [Polyhedron; 2] = fixtures::example17_cells().try_into().unwrap();
    let (r1, r2) = (l1.recession_cone().unwrap(), l2.recession_cone().unwrap());
    let ok = match rec.verdict() {
        recfan_core::ComplexVerdict::BadPair { first, second, intersection } => {
            *intersection == expected
                && !r1.is_face_of(intersection)
                && !r2.is_face_of(intersection)
                && [first, second].contains(&&r1)
                && [first, second].contains(&&r2)
        }
        _ => false,
    };
    let elapsed = t.elapsed();
    let ok = ok && elapsed < Duration::from_secs(1);
    report(1, "recession of the two-sheet complex", ok, "bad pair with overlap cone witness", elapsed);
    assert!(ok);
}

#[test]
fn criterion_02_decomposition_without_connectedness() {
    let t = Instant::now();
    let c = fixtures::example1_case1();
    let mw = c.check_minkowski_weyl().unwrap();
    let quadrant = Polyhedron::from_hrep(HRep::new(
        3,
        vec![hs(&[1, 0, 0], 0), hs(&[0, 1, 0], 0)],
        vec![hs(&[0, 0, 1], 0)],
    ))
    .unwrap();
    let connected = c.support().is_connected();
    let rec_valid = recession_complex(&c).unwrap().is_valid();
    let elapsed = t.elapsed();
    let ok = mw.holds && mw.sigma == Some(quadrant) && !connected && !rec_valid && elapsed < Duration::from_secs(1);
    report(
        2,
        "decomposition holds, support disconnected",
        ok,
        &format!("mw={} connected={connected} rec_valid={rec_valid}", mw.holds),
        elapsed,
    );
    assert!(ok);
}

#[test]
fn criterion_03_local_versus_global_recession() {
    let t = Instant::now();
    let c = fixtures::example1_case2();
    let e = c.support();
    let mw = c.check_minkowski_weyl().unwrap();
    let witness_ok = match &mw.failure_witness {
        Some((p, u)) => {
            e.ray_in_set(p, u).unwrap() && !e.global_recession_contains(u).unwrap()
        }
        None => false,
    };
    let rec = recession_complex(&c).unwrap();
    let u = QVector::from_i64s(&[1, 0, 0]);
    let in_some_cone = rec.cells().iter().any(|s| s.contains_point(&u).unwrap());
    let global = e.global_recession_contains(&u).unwrap();
    let elapsed = t.elapsed();
    let ok = !mw.holds
        && witness_ok
        && rec.is_valid()
        && rec.is_fan()
        && in_some_cone
        && !global
        && elapsed < Duration::from_secs(1);
    report(
        3,
        "decomposition fails with verified witness",
        ok,
        &format!("witness_ok={witness_ok} rec_fan={} (1,0,0): in rec cone={in_some_cone}, in rec(E)={global}", rec.is_fan()),
        elapsed,
    );
    assert!(ok);
}

#[test]
fn criterion_04_hypotheses_imply_conclusions() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e14);
    let mut checked = 0usize;
    let mut with_hypotheses = 0usize;
    let mut subcomplexes = 0usize;
    let mut failures = 0usize;
    let mut check = |c: &PolyhedralComplex, checked: &mut usize, with: &mut usize| -> bool {
        let r = theorem14_pipeline(c).unwrap();
        *checked += 1;
        if !r.hypotheses.hold() {
            return false;
        }
        *with += 1;
        let good = r.conclusions_hold() && r.rational && r.fans == c.is_strongly_convex();
        if !good {
            failures += 1;
        }
        true
    };
    while with_hypotheses < 200 {
        let c = random_arrangement(&mut rng);
        check(&c, &mut checked, &mut with_hypotheses);
        for _ in 0..3 {
            let sub = random_subcomplex(&mut rng, &c);
            if check(&sub, &mut checked, &mut with_hypotheses) {
                subcomplexes += 1;
            }
        }
    }
    let elapsed = t.elapsed();
    let ok = failures == 0 && elapsed < Duration::from_secs(60);
    report(
        4,
        "hypotheses imply all conclusions",
        ok,
        &format!(
            "{with_hypotheses} complexes with hypotheses ({subcomplexes} proper subcomplexes) of {checked} checked, {failures} failures"
        ),
        elapsed,
    );
    assert!(ok);
}

#[test]
fn criterion_05_round_trips() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xc011);
    let mut failures = 0;
    let n = 60;
    for _ in 0..n {
        let c = random_arrangement(&mut rng);
        let sigma = cone_complex(&c).unwrap();
        let back = aff(&sigma).unwrap();
        let again = cone_complex(&back).unwrap();
        let ok = back.cells() == c.cells()
            && again.cells() == sigma.cells()
            && roundtrip_check(&c).unwrap()
            && roundtrip_check(&sigma).unwrap();
        if !ok {
            failures += 1;
        }
    }
    let elapsed = t.elapsed();
    let ok = failures == 0 && elapsed < Duration::from_secs(60);
    report(5, "slice/cone round trips", ok, &format!("{n} complete complexes, {failures} failures"), elapsed);
    assert!(ok);
}

fn random_polyhedra(seed: u64, n: usize) -> Vec<Polyhedron> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let dim = rng.gen_range(1..=4usize);
            random_polyhedron(&mut rng, dim, 8)
        })
        .collect()
}

#[test]
fn criterion_06_recession_of_faces() {
    let t = Instant::now();
    let polys = random_polyhedra(0x1e12, 120);
    let mut failures = 0;
    for p in &polys {
        let mut from_faces: Vec<Polyhedron> =
            p.faces().iter().map(|f| f.recession_cone().unwrap()).collect();
        from_faces.sort();
        from_faces.dedup();
        if from_faces != p.recession_cone().unwrap().faces() {
            failures += 1;
        }
    }
    let elapsed = t.elapsed();
    let ok = failures == 0 && elapsed < Duration::from_secs(30);
    report(6, "recession cones of faces", ok, &format!("{} polyhedra, {failures} failures", polys.len()), elapsed);
    assert!(ok);
}

#[test]
fn criterion_07_slices_of_lifted_cones() {
    let t = Instant::now();
    let polys = random_polyhedra(0x1e12, 120);
    let mut failures = 0;
    for p in &polys {
        let lift = p.lift_cone().unwrap();
        let zero = lift.affine_slice(&Rational::zero()).unwrap();
        let one = lift.affine_slice(&Rational::one()).unwrap();
        if zero != p.recession_cone().unwrap() || one != *p {
            failures += 1;
        }
    }
    let elapsed = t.elapsed();
    let ok = failures == 0;
    report(7, "slices of lifted cones", ok, &format!("{} polyhedra, {failures} failures", polys.len()), elapsed);
    assert!(ok);
}

/// Two polyhedra placed at heights 0 and 1 one dimension up.
fn two_sheets(rng: &mut ChaCha8Rng) -> PolyhedralComplex {
    let dim = rng.gen_range(1..=2usize);
    let place = |p: &Polyhedron, h: i64| {
        let mut ineqs: Vec<Halfspace> = p
            .inequalities()
            .iter()
            .map(|s| Halfspace::new(s.normal().extended(Rational::zero()), s.offset().clone()).unwrap())
            .collect();
        ineqs.sort();
        let mut eqs: Vec<Halfspace> = p
            .equalities()
            .iter()
            .map(|s| Halfspace::new(s.normal().extended(Rational::zero()), s.offset().clone()).unwrap())
            .collect();
        eqs.push(Halfspace::new(QVector::unit(dim + 1, dim), Rational::from(h)).unwrap());
        Polyhedron::from_hrep(HRep::new(dim + 1, ineqs, eqs)).unwrap()
    };
    let a = random_polyhedron(rng, dim, 3);
    let b = random_polyhedron(rng, dim, 3);
    PolyhedralComplex::build(dim + 1, vec![place(&a, 0), place(&b, 1)]).unwrap()
}

#[test]
fn criterion_08_extendable_subdivisions() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5b2);
    let mut inputs = vec![fixtures::example17()];
    for i in 0..60 {
        let c = match i % 3 {
            0 => {
                let c = random_arrangement(&mut rng);
                random_subcomplex(&mut rng, &c)
            }
            1 => {
                let dim = rng.gen_range(1..=3usize);
                PolyhedralComplex::build(dim, vec![random_polyhedron(&mut rng, dim, 4)]).unwrap()
            }
            _ => two_sheets(&mut rng),
        };
        inputs.push(c);
    }
    let mut failures = 0;
    let mut repaired = 0;
    for c in &inputs {
        let s = extendable_subdivision(c).unwrap();
        let rec = recession_complex(&s.refined).unwrap();
        let cone = cone_complex(&s.refined).unwrap();
        if !(s.verify(c) && rec.is_valid() && cone.is_valid()) {
            failures += 1;
        }
        if !recession_complex(c).unwrap().is_valid() {
            repaired += 1;
        }
    }
    let elapsed = t.elapsed();
    let ok = failures == 0 && elapsed < Duration::from_secs(120);
    report(
        8,
        "extendable subdivisions",
        ok,
        &format!("{} complexes ({repaired} with invalid recession before), {failures} failures", inputs.len()),
        elapsed,
    );
    assert!(ok);
}

/// Independent coverage oracle: enumerate the full-dimensional sign
/// regions of the arrangement of all defining hyperplanes inside the
/// target, and test a strictly interior point of each against the pieces.
fn oracle_covers(pieces: &[Polyhedron], target: &Polyhedron) -> bool {
    let dim = target.dim();
    let mut planes: Vec<Halfspace> = target.inequalities().to_vec();
    for p in pieces {
        planes.extend(p.inequalities().iter().cloned());
        planes.extend(p.equalities().iter().cloned());
    }
    fn go(dim: usize, planes: &[Halfspace], chosen: &mut Vec<Halfspace>, target: &Polyhedron, pieces: &[Polyhedron]) -> bool {
        let mut ineqs = target.inequalities().to_vec();
        ineqs.extend(chosen.iter().cloned());
        let region = Polyhedron::from_hrep(HRep::new(dim, ineqs, vec![])).unwrap();
        if region.dimension() != Some(dim) {
            return true;
        }
        let x = region.relative_interior_point().unwrap();
        if !chosen.iter().all(|h| h.slack(&x).is_positive()) {
            return true;
        }
        match planes.split_first() {
            None => pieces.iter().any(|p| p.contains_point(&x).unwrap()),
            Some((h, rest)) => [h.clone(), h.flipped()].into_iter().all(|side| {
                chosen.push(side);
                let r = go(dim, rest, chosen, target, pieces);
                chosen.pop();
                r
            }),
        }
    }
    go(dim, &planes, &mut Vec::new(), target, pieces)
}

fn full_dim_target(rng: &mut ChaCha8Rng, dim: usize) -> Polyhedron {
    loop {
        let p = random_polyhedron(rng, dim, 3);
        if p.dimension() == Some(dim) {
            return p;
        }
    }
}

#[test]
fn criterion_09_coverage_against_oracle() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c1e);
    let n = 150;
    let mut disagreements = 0;
    let mut covered = 0;
    for i in 0..n {
        let dim = rng.gen_range(1..=3usize);
        let target = full_dim_target(&mut rng, dim);
        let mut pieces = Vec::new();
        match i % 3 {
            0 => {
                // Split the target by random hyperplanes, maybe losing a part.
                let h = random_hyperplane(&mut rng, dim);
                let g = random_hyperplane(&mut rng, dim);
                for a in [h.clone(), h.flipped()] {
                    for b in [g.clone(), g.flipped()] {
                        let mut ineqs = target.inequalities().to_vec();
                        ineqs.push(a.clone());
                        ineqs.push(b.clone());
                        pieces.push(Polyhedron::from_hrep(HRep::new(dim, ineqs, vec![])).unwrap());
                    }
                }
                if rng.gen_bool(0.5) {
                    pieces.remove(rng.gen_range(0..pieces.len()));
                }
            }
            1 => {
                for _ in 0..rng.gen_range(1..=3) {
                    pieces.push(random_polyhedron(&mut rng, dim, 2));
                }
            }
            _ => {
                let mut ineqs = target.inequalities().to_vec();
                let h = random_hyperplane(&mut rng, dim);
                ineqs.push(h.clone());
                pieces.push(Polyhedron::from_hrep(HRep::new(dim, ineqs, vec![])).unwrap());
                // The other side, sometimes shifted off the boundary.
                let shift = Rational::new(rng.gen_range(0..=1i64), 2).unwrap();
                let other = Halfspace::new(-h.normal(), &(-h.offset()) + &shift).unwrap();
                let mut ineqs = target.inequalities().to_vec();
                ineqs.push(other);
                pieces.push(Polyhedron::from_hrep(HRep::new(dim, ineqs, vec![])).unwrap());
            }
        }
        let set = PolyhedralSet::new(dim, pieces.clone()).unwrap();
        let expected = oracle_covers(set.pieces(), &target);
        let got = set.covers(&target);
        let agree = match &got {
            Coverage::Covered => expected,
            Coverage::Uncovered(w) => {
                !expected && target.contains_point(w).unwrap() && !set.contains_point(w).unwrap()
            }
        };
        if !agree {
            disagreements += 1;
        }
        if expected {
            covered += 1;
        }
    }
    let elapsed = t.elapsed();
    let ok = disagreements == 0;
    report(
        9,
        "coverage agrees with sign-region oracle",
        ok,
        &format!("{n} instances ({covered} covered), {disagreements} disagreements"),
        elapsed,
    );
    assert!(ok);
}

#[test]
fn criterion_10_toric_datum_cli() {
    let t = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_recfan");
    let status = Command::new(bin)
        .args(["fixtures", "--output"])
        .arg(dir.path())
        .output()
        .unwrap()
        .status;
    assert!(status.success());
    let square = Command::new(bin)
        .arg("toric-datum")
        .arg(dir.path().join("complete-square-complex.json"))
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&square.stdout).unwrap();
    let mut rays = 0;
    let mut primitive = true;
    for cone in doc["cones"].as_array().unwrap() {
        for r in cone["rays"].as_array().unwrap() {
            rays += 1;
            let g = r.as_array().unwrap().iter().fold(BigInt::zero(), |g, x| {
                g.gcd(&x.as_str().unwrap().parse::<BigInt>().unwrap())
            });
            primitive &= g.is_one();
        }
    }
    let refused = Command::new(bin)
        .arg("toric-datum")
        .arg(dir.path().join("example17.json"))
        .output()
        .unwrap();
    let err: Value = serde_json::from_slice(&refused.stdout).unwrap();
    let elapsed = t.elapsed();
    let ok = square.status.code() == Some(0)
        && primitive
        && rays > 0
        && refused.status.code() == Some(2)
        && err["error"]["predicate"] == "complete";
    report(
        10,
        "toric datum export and refusal",
        ok,
        &format!(
            "square: exit {:?}, {rays} rays primitive={primitive}; two-sheet: exit {:?} predicate {}",
            square.status.code(),
            refused.status.code(),
            err["error"]["predicate"]
        ),
        elapsed,
    );
    assert!(ok);
}

#[test]
fn intersection_formula_spot_check() {
    // Not a numbered criterion: the cone-complex intersection identity on
    // the complete square complex.
    let c = fixtures::complete_square_complex();
    for a in c.cells() {
        for b in c.cells() {
            let lhs = a.lift_cone().unwrap().intersect(&b.lift_cone().unwrap()).unwrap();
            let meet = a.intersect(b).unwrap();
            let rhs = if meet.is_empty() {
                embed_at_zero(&a.recession_cone().unwrap().intersect(&b.recession_cone().unwrap()).unwrap())
            } else {
                meet.lift_cone().unwrap()
            };
            assert_eq!(lhs, rhs);
        }
    }
}
