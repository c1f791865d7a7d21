"""
Compile a transformed document with pdflatex, when it is installed.
"""

import shutil
import subprocess

import pytest

from zero2hero.pipeline import RunConfig, run

pytestmark = pytest.mark.integration

COMPILABLE_DOCUMENT = r"""\documentclass{article}
\usepackage{amsmath}
\begin{document}
Energy is $E = mc^{2}$ and
\[ \frac{a}{b} + x \]
\begin{align}
a &= b + c \\
  &= d
\end{align}
\begin{equation}
\begin{split}
    \mathcal{L}=\sum_{i=1}^{n}\Bigg[&-y_i\oint_{\Omega}\Bigg(\zeta\left(\frac{\hat{y_i}}{1 - \hat{y_i}} \right) \frac{\partial}{\partial \theta_i} \left( f_i(\theta) \log \frac{\hat{y_i}}{1 - \hat{y_i}}\right) \Bigg) d\theta \\
&+ \frac{1}{2} \sum_{k=1}^{n} \frac{\partial^2}{\partial x_k^2} \left( \sum_{i=1}^{n} y_i \hat{y_i} \frac{\partial \log f_i(\theta)}{\partial x_k} \right)\Bigg],
\end{split}
\end{equation}
\end{document}
"""


@pytest.mark.latex
@pytest.mark.skipif(shutil.which('pdflatex') is None, reason='pdflatex is not installed')
class TestLatexCompile:
    """Test that rewritten documents still compile."""

    @pytest.mark.parametrize('seed', [1, 2, 3])
    def test_transformed_document_compiles(self, write_document, tmp_path, seed):
        """Test a full-intensity rewrite."""
        output = tmp_path / 'out.tex'
        run(RunConfig(write_document(COMPILABLE_DOCUMENT), output, seed=seed, intensity=5))

        result = subprocess.run(
            ['pdflatex', '-interaction=nonstopmode', '-halt-on-error', output.name],
            cwd=tmp_path,
            capture_output=True,
            text=True,
            timeout=120,
            check=False,
        )

        assert result.returncode == 0, result.stdout[-2000:]
