use super::*;

fn cell(x: i64, y: i64) -> Cell {
    Cell::new(x, y)
}

#[test]
fn hex_ball_radius_one() {
    let hex = presets::hex().unwrap();
    let mut b = hex.ball(cell(0, 0), 1);
    b.sort();
    assert_eq!(b, vec![cell(-1, 0), cell(0, 0), cell(0, 1), cell(1, 0)]);
    let mut b1 = hex.ball(cell(1, 0), 1);
    b1.sort();
    assert_eq!(b1, vec![cell(0, 0), cell(1, -1), cell(1, 0), cell(2, 0)]);
    // |B_1| = 4 for every cell
    for x in -3..3 {
        for y in -3..3 {
            assert_eq!(hex.ball(cell(x, y), 1).len(), 4);
        }
    }
}

#[test]
fn king_and_square_balls() {
    let king = presets::king().unwrap();
    assert_eq!(king.ball(cell(0, 0), 1).len(), 9);
    assert_eq!(king.ball(cell(7, -2), 2).len(), 25);
    let square = presets::square().unwrap();
    assert_eq!(square.ball(cell(0, 0), 2).len(), 13);
    let tri = presets::triangular().unwrap();
    assert_eq!(tri.ball(cell(0, 0), 1).len(), 7);
    assert_eq!(tri.ball(cell(2, 5), 2).len(), 19);
}

#[test]
fn ball_equivariance_and_symmetry() {
    // 1000 random samples of (cell, lattice translate, radius <= 3)
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for grid in [
        presets::hex().unwrap(),
        presets::king().unwrap(),
        presets::triangular().unwrap(),
    ] {
        let t = grid.lattice();
        for _ in 0..334 {
            let c = cell((next() % 9) as i64 - 4, (next() % 9) as i64 - 4);
            let ka = (next() % 5) as i64 - 2;
            let kb = (next() % 5) as i64 - 2;
            let tr = cell(
                ka * t.u.x + kb * t.w.x,
                ka * t.u.y + kb * t.w.y,
            );
            let r = (next() % 4) as u32;
            let mut b1: Vec<Cell> = grid.ball(c + tr, r);
            let mut b2: Vec<Cell> = grid.ball(c, r).into_iter().map(|u| u + tr).collect();
            b1.sort();
            b2.sort();
            assert_eq!(b1, b2, "equivariance failed on {}", grid.name());
            // symmetry: u in B_r(c) iff c in B_r(u)
            for &u in b1.iter().take(3) {
                assert!(grid.ball(u, r).contains(&(c + tr)));
            }
        }
    }
}

#[test]
fn normalize_period_examples() {
    let hex = presets::hex().unwrap();
    let v = hex.normalize_period(cell(0, -126)).unwrap();
    assert_eq!((v.x, v.y, v.reflected), (0, 126, false));

    // (1, -11) negates to (-1, 11), then reflects to (1, 11)
    let v = hex.normalize_period(cell(1, -11)).unwrap();
    assert_eq!((v.x, v.y, v.reflected), (1, 11, true));
    assert_eq!(v.original(), cell(-1, 11));

    match hex.normalize_period(cell(1, 0)) {
        Err(Error::DegeneratePeriod(1, 0)) => {}
        other => panic!("expected DegeneratePeriod, got {other:?}"),
    }
    match hex.normalize_period(cell(0, 3)) {
        Err(Error::NotInLattice(0, 3, _)) => {}
        other => panic!("expected NotInLattice, got {other:?}"),
    }
    match hex.normalize_period(cell(0, 0)) {
        Err(Error::DegeneratePeriod(0, 0)) => {}
        other => panic!("expected DegeneratePeriod, got {other:?}"),
    }

    // triangular has no horizontal mirror: negative x is kept
    let tri = presets::triangular().unwrap();
    let v = tri.normalize_period(cell(-2, 1)).unwrap();
    assert_eq!((v.x, v.y, v.reflected), (-2, 1, false));
}

#[test]
fn reduce_mod_period_examples() {
    let v = PeriodVector {
        x: 0,
        y: 2,
        reflected: false,
    };
    assert_eq!(reduce_mod_period(v, cell(5, 7)), cell(5, 1));
    let v = PeriodVector {
        x: 1,
        y: 11,
        reflected: false,
    };
    assert_eq!(reduce_mod_period(v, cell(0, 11)), cell(-1, 0));
    let v = PeriodVector {
        x: 2,
        y: 4,
        reflected: false,
    };
    assert_eq!(reduce_mod_period(v, cell(3, 9)), cell(-1, 1));
    // idempotent and constant on orbits
    for y in -9..9 {
        for x in -9..9 {
            let c = cell(x, y);
            let r = reduce_mod_period(v, c);
            assert_eq!(reduce_mod_period(v, r), r);
            assert_eq!(reduce_mod_period(v, c + v.as_cell()), r);
            assert!(r.y >= 0 && r.y < 4);
        }
    }
}

#[test]
fn step_widths() {
    assert_eq!(presets::hex().unwrap().step_width(), 2);
    assert_eq!(presets::square().unwrap().step_width(), 1);
    assert_eq!(presets::king().unwrap().step_width(), 1);
    assert_eq!(presets::triangular().unwrap().step_width(), 1);
}

#[test]
fn grid_file_round_trip() {
    let text = "\
# the brick-wall hex encoding, spelled out
name hex-custom
lattice 0,2 1,1
cosets 0,0 1,0
neighbors 0,0: 1,0 -1,0 0,1
neighbors 1,0: 1,0 -1,0 0,-1
mirror-x true
";
    let custom = parse_grid_file(text).unwrap();
    let hex = presets::hex().unwrap();
    for x in -3..3 {
        for y in -3..3 {
            let mut a = custom.ball(cell(x, y), 2);
            let mut b = hex.ball(cell(x, y), 2);
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }
    assert_eq!(custom.step_width(), 2);
}

#[test]
fn bad_grids_rejected() {
    // asymmetric adjacency
    let text = "\
name broken
lattice 1,0 0,1
cosets 0,0
neighbors 0,0: 1,0
";
    assert!(parse_grid_file(text).is_err());
    // coset count mismatch
    let text = "\
name broken2
lattice 0,2 1,1
cosets 0,0
neighbors 0,0: 1,0 -1,0
";
    assert!(parse_grid_file(text).is_err());
}

#[test]
fn ceil_div_negative_operands() {
    assert_eq!(ceil_div(0, 4), 0);
    assert_eq!(ceil_div(2, 4), 1);
    assert_eq!(ceil_div(6, 4), 2);
    assert_eq!(ceil_div(-1, 4), 0);
    assert_eq!(ceil_div(-4, 4), -1);
    assert_eq!(ceil_div(-5, 4), -1);
}
