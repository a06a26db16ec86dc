use fmr_sweep::{read_csv, write_csv, CsvRow, RowStatus};

fn emit(rows: &[CsvRow]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).unwrap();
    String::from_utf8(buf).unwrap()
}

const HEADER: &str = "theta_ext_deg,branch_index,h_lo_oe,h_hi_oe,status,boxes_merged";

#[test]
fn empty_report_is_header_only() {
    assert_eq!(emit(&[]), format!("{HEADER}\n"));
    assert!(read_csv(emit(&[]).as_bytes()).unwrap().is_empty());
}

#[test]
fn single_row_format() {
    let row = CsvRow {
        theta_ext_deg: 0.0,
        branch_index: 0,
        h_lo_oe: 102.1,
        h_hi_oe: 102.3,
        status: RowStatus::Resonance,
        boxes_merged: 1,
    };
    assert_eq!(
        emit(&[row]),
        format!("{HEADER}\n0.0,0,102.1,102.3,resonance,1\n")
    );
}

#[test]
fn awkward_floats_round_trip_exactly() {
    let values = [
        0.1 + 0.2,
        1.0 / 3.0,
        5269.185286054961,
        f64::MIN_POSITIVE,
        1e300,
        9999.999999999998,
        -0.0,
    ];
    let rows: Vec<CsvRow> = values
        .iter()
        .enumerate()
        .map(|(i, &v)| CsvRow {
            theta_ext_deg: i as f64 * 2.0,
            branch_index: i,
            h_lo_oe: v,
            h_hi_oe: f64::from_bits(v.to_bits() + 1),
            status: if i % 2 == 0 {
                RowStatus::Resonance
            } else {
                RowStatus::Indeterminate
            },
            boxes_merged: i + 1,
        })
        .collect();
    let back = read_csv(emit(&rows).as_bytes()).unwrap();
    assert_eq!(back.len(), rows.len());
    for (a, b) in back.iter().zip(&rows) {
        assert_eq!(a.h_lo_oe.to_bits(), b.h_lo_oe.to_bits());
        assert_eq!(a.h_hi_oe.to_bits(), b.h_hi_oe.to_bits());
        assert_eq!(a.status, b.status);
    }
}

#[test]
fn malformed_rows_are_rejected() {
    let text = format!("{HEADER}\n0.0,0,abc,102.3,resonance,1\n");
    assert!(read_csv(text.as_bytes()).is_err());
    let text = format!("{HEADER}\n0.0,0,1,2,maybe,1\n");
    assert!(read_csv(text.as_bytes()).is_err());
}
