mod common;

use common::{golden_transcript, pred, pred_process, GOLDEN_PATH};

#[test]
fn transcript_matches_golden() {
    let transcript = golden_transcript(pred);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(GOLDEN_PATH, &transcript).unwrap();
    }
    let golden = std::fs::read_to_string(GOLDEN_PATH).unwrap();
    for (i, (got, want)) in transcript.lines().zip(golden.lines()).enumerate() {
        assert_eq!(got, want, "line {}", i + 1);
    }
    assert_eq!(transcript.lines().count(), golden.lines().count());
}

#[test]
fn processes_reproduce_the_in_process_transcript() {
    assert_eq!(golden_transcript(pred_process), golden_transcript(pred));
}
