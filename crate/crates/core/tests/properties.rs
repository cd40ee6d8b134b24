use std::collections::HashSet;

use proptest::prelude::*;

use nilhom::charlib::{irrep_character, ClassicalGroup};
use nilhom::kostant::{homology_table, parse_levi_weight, Family};
use nilhom::modrule::{sp_modification_border, sp_modification_weyl};
use nilhom::partition::Partition;

/// Partitions of size at most `max_size`, as sorted random parts.
fn partition_strategy(
    max_len: usize,
    max_part: usize,
    max_size: usize,
) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_filter_map(
        "too large",
        move |mut parts| {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            (parts.iter().sum::<usize>() <= max_size).then(|| Partition::new(parts).unwrap())
        },
    )
}

fn edge_connected(cells: &[(usize, usize)]) -> bool {
    let Some(&first) = cells.first() else {
        return false;
    };
    let set: HashSet<_> = cells.iter().copied().collect();
    let mut seen = HashSet::from([first]);
    let mut stack = vec![first];
    while let Some((r, c)) = stack.pop() {
        let neighbours = [
            (r + 1, c),
            (r, c + 1),
            (r.wrapping_sub(1), c),
            (r, c.wrapping_sub(1)),
        ];
        for nb in neighbours {
            if set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    seen.len() == set.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn transpose_is_an_involution(lambda in partition_strategy(12, 12, 40)) {
        let t = lambda.transpose();
        prop_assert_eq!(t.transpose(), lambda.clone());
        prop_assert_eq!(t.size(), lambda.size());
        prop_assert_eq!(t.length(), lambda.part(0));
        prop_assert_eq!(t.rank(), lambda.rank());
    }

    #[test]
    fn border_strips_are_border_strips(lambda in partition_strategy(10, 8, 60), r in 0usize..20) {
        if let Some(removal) = lambda.remove_border_strip(r) {
            let cells = lambda.skew_cells(&removal.remainder);
            prop_assert!(lambda.contains(&removal.remainder));
            prop_assert_eq!(cells.len(), r);
            prop_assert_eq!(removal.len(), r);
            let set: HashSet<_> = cells.iter().copied().collect();
            for &(row, col) in &cells {
                let square = [(row + 1, col), (row, col + 1), (row + 1, col + 1)];
                prop_assert!(!square.iter().all(|c| set.contains(c)));
            }
            prop_assert!(edge_connected(&cells));
            prop_assert!(set.contains(&(lambda.length() - 1, 0)));
            let columns: HashSet<_> = cells.iter().map(|c| c.1).collect();
            let rows: HashSet<_> = cells.iter().map(|c| c.0).collect();
            prop_assert_eq!(columns.len(), removal.columns);
            prop_assert_eq!(rows.len(), removal.rows);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn modification_rules_agree(lambda in partition_strategy(14, 7, 70), n in 0usize..4) {
        let border = sp_modification_border(&lambda, n);
        let weyl = sp_modification_weyl(&lambda, n).unwrap();
        prop_assert_eq!(border.outcome(), weyl.outcome());
        if let (Some(index), Some(tau)) = (border.index.finite(), border.reduced.as_ref()) {
            prop_assert!(index <= lambda.size());
            prop_assert!(tau.length() <= n);
            let columns: usize = border.strips.iter().map(|s| s.columns).sum();
            prop_assert_eq!(columns, index);
            let removed: usize = border.strips.iter().map(|s| s.len()).sum();
            prop_assert_eq!(lambda.size() - removed, tau.size());
            prop_assert!(border.strips.windows(2).all(|w| w[0].columns > w[1].columns));
        } else {
            prop_assert!(border.reduced.is_none());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn tables_are_well_formed(n in 0usize..4, k in 1usize..4, which in 0usize..3, l in 1usize..3) {
        let family = match which {
            0 => Family::Sp { n, k },
            1 => Family::O { m: n + 1, k },
            _ => Family::Gl { n, k, l },
        };
        let table = homology_table(family).unwrap();
        prop_assert_eq!(table.rows_in_degree(0).count(), 1);
        prop_assert_eq!(table.rows_in_degree(family.dim()).count(), 1);
        prop_assert_eq!(table.max_degree(), family.dim());
        for row in &table.rows {
            let labels = parse_levi_weight(&row.levi_weight, &family).unwrap();
            prop_assert_eq!(labels, row.labels());
        }
    }

    #[test]
    fn irreducible_characters_are_weyl_symmetric(
        lambda in partition_strategy(3, 3, 6),
        which in 0usize..4,
        rank in 1usize..4,
    ) {
        let group = match which {
            0 => ClassicalGroup::Gl(rank),
            1 => ClassicalGroup::Sp(rank),
            2 => ClassicalGroup::So(2 * rank + 1),
            _ => ClassicalGroup::So(2 * rank + 2),
        };
        prop_assume!(lambda.length() <= group.rank());
        let label = lambda.padded(group.rank());
        let c = irrep_character(group, &label).unwrap();
        prop_assert!(c.is_weyl_symmetric());
        prop_assert_eq!(
            num_bigint::BigInt::from(c.dimension()),
            group.weyl_dimension(&label).unwrap()
        );
    }
}
