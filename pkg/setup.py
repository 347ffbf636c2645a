from setuptools import setup, find_packages

setup(
	name="cxscheme",
	version="1.0.0",
	description="complex schemes of separating real plane curves and their orientation inequalities",
	packages=find_packages(exclude=['tests']),
	install_requires=[
		'gevent',
		'monotonic',
		'numpy',
	],
	extras_require={
		'test': ['pytest', 'hypothesis'],
	},
	entry_points={
		'console_scripts': ['cxscheme=cxscheme.cli:main'],
	},
)
