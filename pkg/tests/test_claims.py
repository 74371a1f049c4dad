import json

import jsonschema
import pytest

from lkconj.analysis.claims import PASS, FAIL, claim_ids, verdicts_to_json, verify_paper_claims

SCHEMA = {
    "type": "array",
    "minItems": 14,
    "items": {
        "type": "object",
        "required": ["claim_id", "paper_locus", "status", "evidence"],
        "additionalProperties": False,
        "properties": {
            "claim_id": {"type": "string"},
            "paper_locus": {"type": "string"},
            "status": {"type": "string", "pattern": r"^(PASS|FAIL|CHECKED\(.+\))$"},
            "evidence": {"type": "object", "minProperties": 1},
        },
    },
}


@pytest.fixture(scope="module")
def verdicts():
    return {v.claim_id: v for v in verify_paper_claims()}


def test_registry_size_and_order(verdicts):
    assert len(verdicts) >= 14
    assert list(verdicts) == claim_ids()
    assert len(set(claim_ids())) == len(claim_ids())


def test_json_schema_and_determinism():
    a = verdicts_to_json(verify_paper_claims())
    b = verdicts_to_json(verify_paper_claims())
    assert a == b
    jsonschema.validate(json.loads(a), SCHEMA)


@pytest.mark.parametrize(
    "claim_id",
    [
        "prop4-alpha-subgroup",
        "rho-T-squared-central",
        "sigma-from-T-identities",
        "definition1-matches-definition3",
        "relations-n3",
        "relations-n4",
        "qset-P2-contains-2",
        "qset-R2-contains-half",
        "qset-S-contains-half",
        "example6-kernel-witness",
        "prop5-P-spectrum",
        "prop5-R-spectrum",
        "thm7-det-formula",
        "thm8-c-i-entries",
        "thm8-d-i-entries",
        "thm8-d-ii-entries",
        "prop9-conjugation-reduction",
        "example10-reductions",
        "thm11-not-in-kernel",
    ],
)
def test_independently_derived_claims_pass(verdicts, claim_id):
    assert verdicts[claim_id].status == PASS


@pytest.mark.parametrize("claim_id", ["thm8-a-i-printed-matrix", "thm8-a-ii-printed-matrix", "thm8-c-ii-entries"])
def test_printed_matrices_that_disagree_with_direct_evaluation(verdicts, claim_id):
    # the printed entry only holds at k = 1 (a) or is q^{2k} rather than 1 (c.ii, odd r)
    assert verdicts[claim_id].status == FAIL
    assert verdicts[claim_id].evidence


def test_checked_tier(verdicts):
    for cid in ("thm8-b-q4-entry", "thm8-e-i-quarter-entry", "thm8-e-ii-printed-matrix", "prop5-S-witness"):
        assert verdicts[cid].status.startswith("CHECKED(")
        assert not verdicts[cid].hard
    assert verdicts["thm8-b-q4-entry"].status == "CHECKED(match)"
    assert verdicts["thm8-e-i-quarter-entry"].status == "CHECKED(match)"
    assert verdicts["thm8-e-ii-printed-matrix"].status == "CHECKED(mismatch)"


def test_only_filter():
    out = verify_paper_claims(only=["rho-T-squared-central"])
    assert [v.claim_id for v in out] == ["rho-T-squared-central"]
