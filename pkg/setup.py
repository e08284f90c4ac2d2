from setuptools import setup, find_packages

setup(
    name='casson',
    packages=find_packages(exclude=['tests*']),
    package_data={'casson': ['fixtures/*.pd']},
    install_requires=['numpy', 'scipy', 'sympy'],
    extras_require={'test': ['pytest', 'hypothesis']},
    entry_points={'console_scripts': ['casson=casson.cli:main']},
)
