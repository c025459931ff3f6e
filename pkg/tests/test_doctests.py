import doctest

import pytest

from votelace import elections, pairs, perms


@pytest.mark.parametrize("module", [perms, pairs, elections])
def test_docstring_examples(module):
    result = doctest.testmod(module)
    assert result.failed == 0
