from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "icat._kernel_c",
                ["src/icat/_kernel_c.pyx"],
                optional=True,  # fall back to the pure-Python kernel if the build fails
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
