/**
 * GradeBook185 program.
 */
public class GradeBook185
{
	static int vowels(String word)
	{
		int count = 0;
		for (int idx = 0; idx < word.length(); idx++)
		{
			char ch = Character.toLowerCase(word.charAt(idx));
			switch (ch)
			{
				case 'a':
				case 'e':
				case 'i':
				case 'o':
				case 'u':
				count++;
				break;
				default:
				break;
			}
		}
		return count;
	}

	public static void main(String[] args)
	{
		System.out.println(vowels("hello world"));
	}
}
