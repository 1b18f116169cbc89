import pytest

pytest.register_assert_rewrite('test.tutils')
