import pytest

from moonshine import forms


@pytest.fixture(scope="session")
def catalog():
    """A session-wide form cache so expensive series build once."""
    return forms.FormCatalog()
