mod support;

use support::oracles::{check_apollonius, check_tangential};
use sidedisk::geom::{apollonius_pm2, tangential_diagonal2};
use sidedisk::scalar::{int, rat};

#[test]
fn apollonius_matches_coordinates() {
    assert_eq!(check_apollonius(1000, 7), (1000, 0));
}

#[test]
fn tangential_diagonal_matches_coordinates() {
    assert_eq!(check_tangential(1000, 11), (1000, 0));
}

#[test]
fn hand_cases() {
    // 3-4-5 right triangle, median to the hypotenuse is 5/2.
    assert_eq!(apollonius_pm2(&int(9), &int(16), &int(25)).unwrap(), rat(25, 4));
    // Square of side 2: diagonal² = 8.
    assert_eq!(tangential_diagonal2(&int(1), &int(1), &int(1), &int(1)).unwrap(), int(8));
    assert!(apollonius_pm2(&int(-1), &int(1), &int(1)).is_err());
    assert!(tangential_diagonal2(&int(0), &int(1), &int(1), &int(1)).is_err());
}
