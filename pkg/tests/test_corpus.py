import pytest
from hypothesis import given
from hypothesis import strategies as st

from tweetsent.corpus import RawRecord, clean, load_csv, read_clean_csv, write_clean_csv
from tweetsent.errors import IoError, MalformedCsv, MissingColumn


def recs(*texts):
    return [RawRecord(i, t) for i, t in enumerate(texts)]


def test_load_keeps_file_order_and_extras(write_csv):
    path = write_csv("id,text,user\n1,first,a\n2,second,b\n3,third,c\n")
    rows = load_csv(path)
    assert [r.text for r in rows] == ["first", "second", "third"]
    assert [r.row_index for r in rows] == [0, 1, 2]
    assert rows[1].extra == (("id", "2"), ("user", "b"))


def test_rfc4180_quoting(write_csv):
    path = write_csv('id,text\n1,"a,""b"""\n2,"line one\nline two"\n')
    rows = load_csv(path)
    assert rows[0].text == 'a,"b"'
    assert rows[1].text == "line one\nline two"
    assert rows[1].row_index == 1


def test_custom_text_column(write_csv):
    path = write_csv("tweet,n\nhello,1\n")
    assert load_csv(path, "tweet")[0].text == "hello"


def test_missing_column(write_csv):
    with pytest.raises(MissingColumn):
        load_csv(write_csv("id,body\n1,x\n"))


def test_empty_file_has_no_header(write_csv):
    with pytest.raises(MissingColumn):
        load_csv(write_csv(""))


def test_invalid_utf8_is_malformed(write_csv):
    path = write_csv(b"id,text\n1,ok\n2,bad \xff byte\n")
    with pytest.raises(MalformedCsv) as exc:
        load_csv(path)
    assert exc.value.row_index == 1


def test_ragged_row_is_malformed(write_csv):
    with pytest.raises(MalformedCsv) as exc:
        load_csv(write_csv("id,text\n1,a\n2,b,extra\n"))
    assert exc.value.row_index == 1


def test_unterminated_quote_is_malformed(write_csv):
    with pytest.raises(MalformedCsv):
        load_csv(write_csv('id,text\n1,"never closed\n'))


def test_missing_file():
    with pytest.raises(IoError):
        load_csv("/nonexistent/tweets.csv")


def test_bom_is_ignored(write_csv):
    assert load_csv(write_csv("﻿text\nhi\n"))[0].text == "hi"


def test_clean_drops_empty_then_duplicates():
    c = clean(recs("hi", "", "hi", "yo"))
    assert [d.text for d in c.records] == ["hi", "yo"]
    assert [d.doc_id for d in c.records] == [0, 1]
    assert (c.dropped_empty, c.dropped_duplicate, c.source_count) == (1, 1, 4)


def test_clean_empty_input():
    c = clean([])
    assert len(c) == 0
    assert (c.source_count, c.dropped_empty, c.dropped_duplicate) == (0, 0, 0)


def test_duplicates_compare_after_trimming_only():
    c = clean(recs("  Peace ", "Peace", "peace", "\t"))
    assert [d.text for d in c.records] == ["Peace", "peace"]
    assert c.dropped_duplicate == 1 and c.dropped_empty == 1


def test_clean_csv_round_trip(tmp_path):
    c = clean([RawRecord(0, "a,b", (("id", "7"),)), RawRecord(1, 'say "hi"', (("id", "8"),))])
    path = tmp_path / "clean.csv"
    write_clean_csv(c, path)
    back = read_clean_csv(path)
    assert back.records == c.records


@given(st.lists(st.sampled_from(["a", "b", " a", "", "  ", "c ", "dd"]), max_size=30))
def test_clean_properties(texts):
    c = clean(recs(*texts))
    out = [d.text for d in c.records]
    assert c.source_count == len(c.records) + c.dropped_empty + c.dropped_duplicate
    assert len(set(out)) == len(out)
    assert all(t.strip() for t in out)
    assert [d.doc_id for d in c.records] == list(range(len(out)))
    # survivors keep relative input order
    firsts = []
    for t in texts:
        t = t.strip()
        if t and t not in firsts:
            firsts.append(t)
    assert out == firsts
    again = clean([RawRecord(d.doc_id, d.text) for d in c.records])
    assert [d.text for d in again.records] == out
    assert again.dropped_empty == again.dropped_duplicate == 0
