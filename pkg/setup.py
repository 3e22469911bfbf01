import os

from setuptools import setup

ext_modules = []
if not os.environ.get("FTAU_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("ftau._nf_ext", ["src/ftau/_nf_ext.pyx"], language="c++")],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
