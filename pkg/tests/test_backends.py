"""Agreement between the compiled and pure scalar kernels.

Both kernels are imported directly (regardless of which one the package
selected), the same computations are run through each, and the results
must agree in value, canonical text, and hash.
"""

import json
import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

import exacteig._kernel_py as pure_kernel
from exacteig import DivisionByZero, active_backend

compiled_kernel = pytest.importorskip(
    "exacteig._kernel", reason="compiled kernel not built")

KERNELS = (pure_kernel, compiled_kernel)

operand_parts = st.tuples(st.integers(-20, 20), st.integers(1, 9),
                          st.integers(-20, 20), st.integers(1, 9))


def build(kernel, parts):
    re_num, re_den, im_num, im_den = parts
    return kernel.GaussianRational(kernel.Rational(re_num, re_den),
                                   kernel.Rational(im_num, im_den))


def agree(results):
    first, second = results
    assert repr(first) == repr(second)
    assert hash(first) == hash(second)
    assert (first.re.numerator, first.re.denominator) == \
        (second.re.numerator, second.re.denominator)
    assert (first.im.numerator, first.im.denominator) == \
        (second.im.numerator, second.im.denominator)


class TestKernelAgreement:
    @given(operand_parts, operand_parts)
    def test_ring_operations(self, lhs, rhs):
        for op in ("__add__", "__sub__", "__mul__"):
            agree([getattr(build(k, lhs), op)(build(k, rhs))
                   for k in KERNELS])

    @given(operand_parts, operand_parts)
    def test_division(self, lhs, rhs):
        if rhs[0] == 0 and rhs[2] == 0:
            return
        agree([build(k, lhs) / build(k, rhs) for k in KERNELS])

    @given(operand_parts)
    def test_negation_and_conjugation(self, parts):
        agree([-build(k, parts) for k in KERNELS])
        agree([build(k, parts).conjugate() for k in KERNELS])

    @given(operand_parts, st.integers(0, 6))
    def test_powers(self, parts, exponent):
        agree([build(k, parts) ** exponent for k in KERNELS])

    @given(st.integers(-40, 40), st.integers(1, 24))
    def test_rational_reduction(self, numerator, denominator):
        fractions = [k.Rational(numerator, denominator) for k in KERNELS]
        assert fractions[0].numerator == fractions[1].numerator
        assert fractions[0].denominator == fractions[1].denominator

    def test_both_reject_zero_division(self):
        for kernel in KERNELS:
            with pytest.raises(DivisionByZero):
                kernel.Rational(1, 0)
            one = build(kernel, (1, 1, 0, 1))
            zero = build(kernel, (0, 1, 0, 1))
            with pytest.raises(DivisionByZero):
                one / zero

    def test_shared_exception_type(self):
        assert pure_kernel.DivisionByZero is compiled_kernel.DivisionByZero


class TestBackendSelection:
    def test_active_backend_is_reported(self):
        assert active_backend() in ("compiled", "pure")

    @pytest.mark.parametrize("requested", ["pure", "compiled"])
    def test_environment_override(self, requested):
        env = dict(os.environ, EXACTEIG_BACKEND=requested)
        result = subprocess.run(
            [sys.executable, "-c",
             "from exacteig import active_backend; print(active_backend())"],
            capture_output=True, text=True, env=env)
        assert result.returncode == 0
        assert result.stdout.strip() == requested


class TestWorkloadParity:
    def test_identical_checksums_across_backends(self):
        result = subprocess.run(
            [sys.executable, "-m", "exacteig.backend_bench",
             "--seed", "3", "--json"],
            capture_output=True, text=True)
        assert result.returncode == 0, result.stderr
        payload = json.loads(result.stdout)
        checksums = {entry["checksum"] for entry in payload["results"]}
        assert {entry["backend"] for entry in payload["results"]} == \
            {"compiled", "pure"}
        assert len(checksums) == 1
