"""Halton probing, token estimation and the budget loop."""

from fractions import Fraction

import pytest

from d2snap import (
    AdaptiveResult,
    BudgetError,
    ContractViolation,
    downsample_to_budget,
    estimate_tokens,
    halton,
    parse_html,
    serialize,
)
from d2snap.adaptive import GROWTH_EXPONENT, PARAMETER_BASES, REFERENCE_BYTES


class TestHalton:
    def test_base_two_prefix(self):
        values = [halton(i, 2) for i in range(1, 9)]
        assert values == [1/2, 1/4, 3/4, 1/8, 5/8, 3/8, 7/8, 1/16]

    def test_base_three_prefix(self):
        values = [halton(i, 3) for i in range(1, 6)]
        assert values == [1/3, 2/3, 1/9, 4/9, 7/9]

    def test_matches_digit_reversal_oracle(self):
        # independent route: reverse the base-b digits as an exact fraction
        for base in (2, 3, 5):
            for index in range(1, 50):
                digits = []
                n = index
                while n:
                    n, d = divmod(n, base)
                    digits.append(d)
                expected = sum(
                    Fraction(d, base ** (i + 1)) for i, d in enumerate(digits))
                assert halton(index, base) == pytest.approx(float(expected),
                                                            abs=0, rel=1e-15)

    def test_values_in_open_unit_interval(self):
        assert all(0 < halton(i, 5) < 1 for i in range(1, 200))

    def test_contract(self):
        with pytest.raises(ContractViolation):
            halton(0, 2)
        with pytest.raises(ContractViolation):
            halton(3, 1)


class TestEstimator:
    def test_four_bytes_per_token_rounded_up(self):
        assert estimate_tokens("") == 0
        assert estimate_tokens("abcd") == 1
        assert estimate_tokens("abcde") == 2

    def test_counts_utf8_bytes_not_characters(self):
        assert estimate_tokens("éé") == 1    # 4 bytes
        assert estimate_tokens("世界") == 2    # 6 bytes


SMALL = "<div><h1>Title</h1><p>Some words in a sentence.</p><a href='/x'>go</a></div>"


class TestBudgetLoop:
    def test_small_document_fits_first_try(self):
        result = downsample_to_budget(parse_html(SMALL), max_tokens=4096)
        assert isinstance(result, AdaptiveResult)
        assert result.iterations == 1
        assert result.estimated_tokens <= 4096

    def test_first_probe_uses_halton_index_one(self):
        root = parse_html(SMALL)
        size = len(serialize(root).encode())
        result = downsample_to_budget(root, max_tokens=4096)
        magnitude = size / REFERENCE_BYTES
        assert result.parameters == (
            min(magnitude * halton(1, PARAMETER_BASES["k"]), 1.0),
            min(magnitude * halton(1, PARAMETER_BASES["l"]), 1.0),
            min(magnitude * halton(1, PARAMETER_BASES["m"]), 1.0),
        )

    def test_budget_error_carries_smallest(self):
        # a page that cannot shrink: interactive elements never drop
        html = "<div>" + "".join(
            f'<a href="/very/long/path/number/{i}">x</a>' for i in range(900)
        ) + "</div>"
        with pytest.raises(BudgetError) as err:
            downsample_to_budget(parse_html(html), max_tokens=10,
                                 max_iterations=3)
        assert err.value.smallest is not None
        assert err.value.estimated_tokens > 10
        assert estimate_tokens(serialize(err.value.smallest)) == \
            err.value.estimated_tokens

    def test_success_tokens_within_budget(self):
        html = "<section>" + "".join(
            f"<div><p>Sentence number {i} sits here. Another follows now.</p></div>"
            for i in range(300)) + "</section>"
        result = downsample_to_budget(parse_html(html), max_tokens=2000)
        assert result.estimated_tokens <= 2000
        assert result.iterations >= 1

    def test_custom_estimator_changes_outcome(self):
        root = parse_html(SMALL)
        harsh = lambda text: 10 ** 9
        with pytest.raises(BudgetError):
            downsample_to_budget(root, max_tokens=4096, max_iterations=2,
                                 estimator=harsh)

    def test_deterministic(self):
        html = "<div>" + "<p>Words here now.</p>" * 50 + "</div>"
        root = parse_html(html)
        a = downsample_to_budget(root, max_tokens=250)
        b = downsample_to_budget(root, max_tokens=250)
        assert serialize(a.snapshot) == serialize(b.snapshot)
        assert a.parameters == b.parameters and a.iterations == b.iterations

    def test_contracts(self):
        root = parse_html(SMALL)
        with pytest.raises(ContractViolation):
            downsample_to_budget(root, max_tokens=0)
        with pytest.raises(ContractViolation):
            downsample_to_budget(root, max_tokens=10, max_iterations=0)

    def test_growth_exponent_inflates_size(self):
        assert 10 ** 6 ** 1.0 != 10 ** 6.75
        assert (10 ** 6) ** GROWTH_EXPONENT == pytest.approx(10 ** 6.75)
