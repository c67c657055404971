from setuptools import find_packages, setup


setup(
    name='maxent-correlations',
    version='0.1.0',
    package_dir={'': 'workbench'},
    packages=find_packages('workbench'),
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.9',
        'click>=8.0.3',
        'python-dotenv>=0.19.2',
    ],
    entry_points={
        'console_scripts': ['maxent=cli.commands:main'],
    },
)
