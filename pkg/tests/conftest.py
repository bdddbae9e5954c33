from __future__ import annotations

import pytest

from helpers import make_article


@pytest.fixture
def three_paragraph_article():
    return make_article(
        "example.com",
        paragraphs=[
            "Snow fell across the hills.",
            "The mayor raised taxes in the spring.",
            "Farmers protested the decision loudly.",
        ],
    )
